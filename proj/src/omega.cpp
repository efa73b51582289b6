#include "mvw/omega.hpp"

#include <algorithm>
#include <cctype>

namespace mvw {

OmegaTerm OmegaTerm::make_empty() {
  return OmegaTerm(std::make_shared<Node>(Node{Kind::empty}));
}

OmegaTerm OmegaTerm::make_variable(char name) {
  if (!std::isalpha(static_cast<unsigned char>(name))) {
    throw Error(ErrorKind::parse_error, "variable must be a letter");
  }
  return OmegaTerm(std::make_shared<Node>(Node{Kind::variable, name}));
}

OmegaTerm OmegaTerm::make_concat(OmegaTerm left, OmegaTerm right) {
  return OmegaTerm(std::make_shared<Node>(
      Node{Kind::concat, 0, std::move(left.node_), std::move(right.node_)}));
}

OmegaTerm OmegaTerm::make_omega(OmegaTerm body) {
  return OmegaTerm(
      std::make_shared<Node>(Node{Kind::omega, 0, std::move(body.node_)}));
}

char OmegaTerm::variable_name() const {
  if (kind() != Kind::variable) {
    throw Error(ErrorKind::internal_error, "not a variable node");
  }
  return node_->var;
}

const OmegaTerm& OmegaTerm::wrap(const std::shared_ptr<const Node>& node) {
  // Nodes are immutable and shared; reinterpreting the shared_ptr slot as an
  // OmegaTerm is layout-safe because OmegaTerm has exactly that one member.
  static_assert(sizeof(OmegaTerm) == sizeof(std::shared_ptr<const Node>));
  return *reinterpret_cast<const OmegaTerm*>(&node);
}

const OmegaTerm& OmegaTerm::left() const {
  if (kind() != Kind::concat) {
    throw Error(ErrorKind::internal_error, "not a concat node");
  }
  return wrap(node_->a);
}

const OmegaTerm& OmegaTerm::right() const {
  if (kind() != Kind::concat) {
    throw Error(ErrorKind::internal_error, "not a concat node");
  }
  return wrap(node_->b);
}

const OmegaTerm& OmegaTerm::body() const {
  if (kind() != Kind::omega) {
    throw Error(ErrorKind::internal_error, "not an omega node");
  }
  return wrap(node_->a);
}

namespace {

void collect_variables(const OmegaTerm& t, std::set<char>& out) {
  switch (t.kind()) {
    case OmegaTerm::Kind::empty:
      return;
    case OmegaTerm::Kind::variable:
      out.insert(t.variable_name());
      return;
    case OmegaTerm::Kind::concat:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      return;
    case OmegaTerm::Kind::omega:
      collect_variables(t.body(), out);
      return;
  }
}

void render(const OmegaTerm& t, std::string& out) {
  switch (t.kind()) {
    case OmegaTerm::Kind::empty:
      out += "1";
      return;
    case OmegaTerm::Kind::variable:
      out.push_back(t.variable_name());
      return;
    case OmegaTerm::Kind::concat:
      render(t.left(), out);
      render(t.right(), out);
      return;
    case OmegaTerm::Kind::omega:
      if (t.body().kind() == OmegaTerm::Kind::variable) {
        render(t.body(), out);
      } else {
        out.push_back('(');
        render(t.body(), out);
        out.push_back(')');
      }
      out += "^w";
      return;
  }
}

}  // namespace

std::set<char> OmegaTerm::variables() const {
  std::set<char> out;
  collect_variables(*this, out);
  return out;
}

std::string OmegaTerm::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

bool OmegaTerm::structurally_equal(const OmegaTerm& other) const {
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::empty:
      return true;
    case Kind::variable:
      return variable_name() == other.variable_name();
    case Kind::concat:
      return left().structurally_equal(other.left()) &&
             right().structurally_equal(other.right());
    case Kind::omega:
      return body().structurally_equal(other.body());
  }
  return false;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  OmegaTerm parse() {
    auto term = parse_factors();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return term;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse_error,
                what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '1';
  }

  OmegaTerm parse_factors() {
    if (!at_factor_start()) return OmegaTerm::make_empty();
    OmegaTerm acc = parse_factor();
    while (at_factor_start()) {
      acc = OmegaTerm::make_concat(std::move(acc), parse_factor());
    }
    return acc;
  }

  OmegaTerm parse_factor() {
    OmegaTerm atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != 'w') fail("expected 'w' after '^'");
      ++pos_;
      return OmegaTerm::make_omega(std::move(atom));
    }
    return atom;
  }

  OmegaTerm parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return OmegaTerm::make_empty();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return OmegaTerm::make_variable(c);
    }
    if (c == '(') {
      ++pos_;
      OmegaTerm inner = parse_factors();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OmegaTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string TermIdentity::to_string() const {
  return lhs.to_string() + " = " + rhs.to_string();
}

TermIdentity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorKind::parse_error, "identity must contain '='");
  }
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw Error(ErrorKind::parse_error, "identity must contain a single '='");
  }
  TermIdentity id{parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1)), {}};
  id.variables = id.lhs.variables();
  auto rhs_vars = id.rhs.variables();
  id.variables.insert(rhs_vars.begin(), rhs_vars.end());
  return id;
}

const TermIdentity& identity_R() {
  static const TermIdentity id = parse_identity("(xy)^w x = (xy)^w");
  return id;
}

const TermIdentity& identity_L() {
  static const TermIdentity id = parse_identity("x (zx)^w = (zx)^w");
  return id;
}

const TermIdentity& identity_W() {
  static const TermIdentity id = parse_identity("(xy)^w x (zx)^w = (xy)^w (zx)^w");
  return id;
}

TermIdentity resolve_identity(std::string_view name_or_text) {
  if (name_or_text == "R") return identity_R();
  if (name_or_text == "L") return identity_L();
  if (name_or_text == "W") return identity_W();
  return parse_identity(name_or_text);
}

int eval_term(const OmegaTerm& term, const FiniteMonoid& m, const Assignment& a) {
  switch (term.kind()) {
    case OmegaTerm::Kind::empty:
      return m.identity();
    case OmegaTerm::Kind::variable: {
      auto it = a.find(term.variable_name());
      if (it == a.end()) {
        throw Error(ErrorKind::unbound_variable,
                    std::string("variable '") + term.variable_name() +
                        "' has no assigned value");
      }
      return it->second;
    }
    case OmegaTerm::Kind::concat:
      return m.mul(eval_term(term.left(), m, a), eval_term(term.right(), m, a));
    case OmegaTerm::Kind::omega:
      return m.idempotent_power(eval_term(term.body(), m, a));
  }
  throw Error(ErrorKind::internal_error, "bad term node");
}

IdentityCheck satisfies_identity(const FiniteMonoid& m, const TermIdentity& id,
                                 std::uint64_t assignment_cap) {
  std::vector<char> vars(id.variables.begin(), id.variables.end());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (total > assignment_cap / static_cast<std::uint64_t>(m.size())) {
      throw Error(ErrorKind::assignment_budget_exceeded,
                  "assignment space exceeds cap of " +
                      std::to_string(assignment_cap));
    }
    total *= static_cast<std::uint64_t>(m.size());
  }
  if (total > assignment_cap) {
    throw Error(ErrorKind::assignment_budget_exceeded,
                "assignment space exceeds cap of " + std::to_string(assignment_cap));
  }

  std::vector<int> odometer(vars.size(), 0);
  Assignment a;
  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = odometer[i];
    if (eval_term(id.lhs, m, a) != eval_term(id.rhs, m, a)) {
      return {false, a};
    }
    for (std::size_t i = vars.size(); i-- > 0;) {
      if (++odometer[i] < m.size()) break;
      odometer[i] = 0;
    }
  }
  return {true, std::nullopt};
}

bool in_R(const FiniteMonoid& m) { return satisfies_identity(m, identity_R()).holds; }
bool in_L(const FiniteMonoid& m) { return satisfies_identity(m, identity_L()).holds; }

bool in_W(const FiniteMonoid& m) {
  if (m.size() <= 64) return satisfies_identity(m, identity_W()).holds;
  // Large instances: group the cubic assignment space by x. The identity
  // only depends on x, e = (xy)^w and f = (zx)^w, so it suffices to range
  // over the distinct idempotents e and f for each x.
  for (int x = 0; x < m.size(); ++x) {
    std::vector<int> left, right;
    std::vector<bool> seen_left(static_cast<std::size_t>(m.size()), false);
    std::vector<bool> seen_right(static_cast<std::size_t>(m.size()), false);
    for (int y = 0; y < m.size(); ++y) {
      int e = m.idempotent_power(m.mul(x, y));
      if (!seen_left[static_cast<std::size_t>(e)]) {
        seen_left[static_cast<std::size_t>(e)] = true;
        left.push_back(e);
      }
      int f = m.idempotent_power(m.mul(y, x));
      if (!seen_right[static_cast<std::size_t>(f)]) {
        seen_right[static_cast<std::size_t>(f)] = true;
        right.push_back(f);
      }
    }
    for (int e : left) {
      int ex = m.mul(e, x);
      for (int f : right) {
        if (m.mul(ex, f) != m.mul(e, f)) return false;
      }
    }
  }
  return true;
}

std::vector<Lemma3Violation> check_lemma3(const FiniteMonoid& m) {
  auto g = green(m);
  std::vector<Lemma3Violation> out;
  for (int u = 0; u < m.size(); ++u) {
    for (int x = 0; x < m.size(); ++x) {
      if (!g.same_r(u, m.mul(u, x))) continue;
      for (int v = 0; v < m.size(); ++v) {
        if (!g.same_l(v, m.mul(x, v))) continue;
        int uxv = m.mul(m.mul(u, x), v);
        int uv = m.mul(u, v);
        if (uxv != uv) out.push_back({u, x, v, uxv, uv});
      }
    }
  }
  return out;
}

std::vector<Lemma4Violation> check_lemma4(const FiniteMonoid& m) {
  auto g = green(m);
  std::vector<Lemma4Violation> out;
  for (int u = 0; u < m.size(); ++u) {
    for (int v = 0; v < m.size(); ++v) {
      for (int a = 0; a < m.size(); ++a) {
        if (g.same_r(u, v) && g.same_r(v, m.mul(v, a)) &&
            !g.same_r(u, m.mul(u, a))) {
          out.push_back({Lemma4Violation::Side::right, u, v, a});
        }
        if (g.same_l(u, v) && g.same_l(v, m.mul(a, v)) &&
            !g.same_l(u, m.mul(a, u))) {
          out.push_back({Lemma4Violation::Side::left, u, v, a});
        }
      }
    }
  }
  return out;
}

}  // namespace mvw
