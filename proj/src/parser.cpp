#include "gwwedge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gwwedge/errors.hpp"

namespace gwwedge {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view t) : text_(t) {}

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw ConfigError("unexpected end of expression");
    if (text_[pos_] == ')') throw ConfigError("unbalanced ')' at offset " + std::to_string(pos_));
    if (text_[pos_] == '(') {
      ++pos_;
      SExpr list;
      while (true) {
        skip();
        if (pos_ >= text_.size()) throw ConfigError("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        list.items.push_back(read());
      }
      if (list.items.empty()) throw ConfigError("empty list");
      return list;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    SExpr atom;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
};

int to_int(const SExpr& e) {
  if (!e.is_atom()) throw ConfigError("expected an integer");
  int v = 0;
  const char* b = e.atom.data();
  const char* end = b + e.atom.size();
  auto [p, ec] = std::from_chars(b, end, v);
  if (ec != std::errc() || p != end) throw ConfigError("expected an integer, got '" + e.atom + "'");
  return v;
}

const std::string& head(const SExpr& e) {
  if (e.is_atom() || !e.items[0].is_atom()) throw ConfigError("expected an operator form");
  return e.items[0].atom;
}

void arity(const SExpr& e, std::size_t lo, std::size_t hi) {
  const std::size_t n = e.items.size() - 1;
  if (n < lo || n > hi) throw ConfigError("wrong number of arguments to '" + e.items[0].atom + "'");
}

void collect(const SExpr& e, std::vector<std::string>& out) {
  if (e.is_atom()) return;
  if (head(e) == "E" && e.items.size() >= 3 && e.items[2].is_atom()) {
    const std::string& v = e.items[2].atom;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return;
  }
  for (std::size_t i = 1; i < e.items.size(); ++i) collect(e.items[i], out);
}

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Reader r(text);
  SExpr e = r.read();
  if (!r.done()) throw ConfigError("trailing input after expression");
  if (e.is_atom()) throw ConfigError("expression must be a list");
  return e;
}

std::vector<std::string> expression_variables(const SExpr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

WedgeOperator build_operator(const SExpr& e, const RingPtr& ring) {
  using W = WedgeOperator;
  const std::string& h = head(e);
  auto child = [&](std::size_t i) { return build_operator(e.items[i], ring); };
  auto children = [&] {
    std::vector<W> ops;
    for (std::size_t i = 1; i < e.items.size(); ++i) ops.push_back(child(i));
    return ops;
  };
  if (h == "alpha") {
    arity(e, 1, 1);
    return W::alpha(to_int(e.items[1]));
  }
  if (h == "E") {
    arity(e, 2, 3);
    if (!e.items[2].is_atom()) throw ConfigError("E takes a variable name");
    bool delta = true;
    if (e.items.size() == 4) {
      if (e.items[3].atom != "nodelta") throw ConfigError("unknown E flag '" + e.items[3].atom + "'");
      delta = false;
    }
    return W::e_series(to_int(e.items[1]), LinearForm::var(ring, e.items[2].atom), delta);
  }
  if (h == "Ek") {
    arity(e, 2, 2);
    return W::e_coeff(to_int(e.items[1]), to_int(e.items[2]));
  }
  if (h == "H") {
    arity(e, 0, 0);
    return W::energy();
  }
  if (h == "id") {
    arity(e, 0, 0);
    return W::identity();
  }
  if (h == "*") {
    arity(e, 1, 64);
    return W::product(children());
  }
  if (h == "+") {
    arity(e, 1, 64);
    return W::sum(children());
  }
  if (h == "comm") {
    arity(e, 2, 2);
    return W::commutator(child(1), child(2));
  }
  if (h == "scale") {
    arity(e, 2, 2);
    if (!e.items[1].is_atom()) throw ConfigError("scale takes a rational");
    return W::scaled(parse_rational(e.items[1].atom), child(2));
  }
  if (h == "exp") {
    arity(e, 2, 2);
    if (!e.items[1].is_atom()) throw ConfigError("exp takes a rational");
    return W::exp_alpha(parse_rational(e.items[1].atom), to_int(e.items[2]));
  }
  throw ConfigError("unknown operator '" + h + "'");
}

std::vector<WedgeOperator> build_factors(const SExpr& e, const RingPtr& ring) {
  if (head(e) != "*") return {build_operator(e, ring)};
  std::vector<WedgeOperator> out;
  for (std::size_t i = 1; i < e.items.size(); ++i) out.push_back(build_operator(e.items[i], ring));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view piece = text.substr(0, comma);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || p != piece.data() + piece.size())
      throw ConfigError("bad integer list entry '" + std::string(piece) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace gwwedge
