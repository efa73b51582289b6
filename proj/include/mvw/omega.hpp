#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvw/monoid.hpp"

namespace mvw {

/// Term built from single-letter variables by concatenation and the
/// omega-power t^w (the unique idempotent power under evaluation). The empty
/// term stands for the empty word and evaluates to the identity.
class OmegaTerm {
 public:
  enum class Kind { empty, variable, concat, omega };

  static OmegaTerm make_empty();
  static OmegaTerm make_variable(char name);
  static OmegaTerm make_concat(OmegaTerm left, OmegaTerm right);
  static OmegaTerm make_omega(OmegaTerm body);

  Kind kind() const { return node_->kind; }
  char variable_name() const;
  OmegaTerm left() const;
  OmegaTerm right() const;
  OmegaTerm body() const;

  std::set<char> variables() const;
  std::string to_string() const;
  bool structurally_equal(const OmegaTerm& other) const;

 private:
  struct Node {
    Kind kind;
    char var = 0;
    std::shared_ptr<const Node> a, b;  // concat children / omega body in a
  };
  explicit OmegaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar: term := factor* ; factor := atom ["^w"] ; atom := letter | "1"
/// | "(" term ")". Whitespace is ignored; concatenation associates left.
OmegaTerm parse_term(std::string_view text);

struct TermIdentity {
  OmegaTerm lhs, rhs;
  std::set<char> variables;
  std::string to_string() const;
};

/// Parses "lhs = rhs".
TermIdentity parse_identity(std::string_view text);

const TermIdentity& identity_R();  // (xy)^w x = (xy)^w
const TermIdentity& identity_L();  // x (zx)^w = (zx)^w
const TermIdentity& identity_W();  // (xy)^w x (zx)^w = (xy)^w (zx)^w

/// Resolves one of the predefined names above, else parses the text.
TermIdentity resolve_identity(std::string_view name_or_text);

using Assignment = std::map<char, int>;

int eval_term(const OmegaTerm& term, const FiniteMonoid& m, const Assignment& a);

struct IdentityCheck {
  bool holds = true;
  std::optional<Assignment> counterexample;
};

/// Exhaustive check over all |M|^|X| assignments, iterated in odometer order
/// (variables sorted, last variable fastest); the first violation is
/// reported.
IdentityCheck satisfies_identity(const FiniteMonoid& m, const TermIdentity& id,
                                 std::uint64_t assignment_cap = limits::assignment_cap);

bool in_R(const FiniteMonoid& m);
bool in_L(const FiniteMonoid& m);
bool in_W(const FiniteMonoid& m);

struct Lemma3Violation {
  int u, x, v;
  int uxv, uv;
};

/// Triples where u R ux and v L xv hold but uxv != uv; empty for monoids
/// satisfying the W identity.
std::vector<Lemma3Violation> check_lemma3(const FiniteMonoid& m);

struct Lemma4Violation {
  enum class Side { right, left };
  Side side;
  int u, v, a;
};

/// Violations of R-class propagation (u R v R va but not u R ua) and its
/// left-sided dual; empty for monoids satisfying the W identity.
std::vector<Lemma4Violation> check_lemma4(const FiniteMonoid& m);

}  // namespace mvw
