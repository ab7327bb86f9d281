#include "superflow/serialize.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "superflow/errors.hpp"

namespace superflow {
namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw InvalidArgument("expected an integer in JSON");
}

Rational rational_from_json(const Json& num, const Json& den) {
  Rational q(integer_from_json(num), integer_from_json(den));
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in JSON");
  q.canonicalize();
  return q;
}

Json vars_json(const VarList& v) { return v ? Json(*v) : Json::array(); }

template <class S, class F>
Json terms_json(const MultiPoly<S>& p, F coeff) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t = Json::array();
    for (int k : e) t.push_back(k);
    coeff(t, c);
    terms.push_back(std::move(t));
  }
  return terms;
}

void golden_coeff(Json& t, const Golden& c) {
  for (const auto& x : to_json(c)) t.push_back(x);
}

void cyclotomic_coeff(Json& t, const Cyclotomic& c) { t.push_back(to_json(c)["coefficients"]); }

MultiPoly<Golden> terms_from_json(const VarList& vars, const Json& terms) {
  const std::size_t n = vars->size();
  MultiPoly<Golden> p(vars);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != n + 4) throw InvalidArgument("malformed polynomial term");
    std::vector<int> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = t[k].get<int>();
    const Golden c(rational_from_json(t[n], t[n + 1]), rational_from_json(t[n + 2], t[n + 3]));
    p += MultiPoly<Golden>::monomial(vars, e, c);
  }
  return p;
}

void write_json(std::ostringstream& out, const Json& j, int indent, int level) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * level), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad << Json(k).dump() << (indent > 0 ? ": " : ":");
        write_json(out, v, indent, level + 1);
      }
      out << nl << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j)
        if (v.is_structured()) flat = false;
      out << '[';
      if (!flat) out << nl;
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << (flat ? ", " : ",") << (flat ? "" : nl);
        first = false;
        if (!flat) out << pad;
        write_json(out, v, indent, level + 1);
      }
      if (!flat) out << nl << close;
      out << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = j.get<double>();
      if (!std::isfinite(d)) {
        out << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out << buf;
      return;
    }
    default: out << j.dump();
  }
}

// Recursive descent over + - * / ^ with exact golden values.
class GoldenParser {
 public:
  explicit GoldenParser(const std::string& s) : s_(s) {}

  Golden parse() {
    Golden v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse exact value '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Golden sum() {
    Golden v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  Golden product() {
    Golden v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        const Golden d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  Golden unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Golden power() {
    Golden b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be an integer");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      if (b.is_zero() && neg) fail("division by zero");
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  Golden atom() {
    skip();
    if (eat('(')) {
      Golden v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.compare(pos_, 3, "phi") == 0) {
      pos_ += 3;
      return Golden::phi();
    }
    if (s_.compare(pos_, 5, "sqrt5") == 0) {
      pos_ += 5;
      return Golden::sqrt5();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected a number, phi or sqrt5");
    const std::string num = s_.substr(start, pos_ - start);
    const auto dot = num.find('.');
    if (dot != std::string::npos && num.find('.', dot + 1) != std::string::npos) fail("malformed decimal");
    std::string digits = dot == std::string::npos ? num : num.substr(0, dot) + num.substr(dot + 1);
    if (digits.empty()) fail("malformed decimal");
    long exponent = dot == std::string::npos ? 0 : -static_cast<long>(num.size() - dot - 1);
    // Scientific notation: 1e-10, 2.5E3.
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      bool neg = false;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) neg = s_[q++] == '-';
      const std::size_t e0 = q;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      if (e0 == q || q - e0 > 4) fail("malformed exponent");
      const long e = std::stol(s_.substr(e0, q - e0));
      exponent += neg ? -e : e;
      pos_ = q;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    const mpz_class n(digits, 10);
    Rational q = exponent >= 0 ? Rational(n * scale) : Rational(n, scale);
    q.canonicalize();
    return Golden(q);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Json to_json(const Golden& x) {
  const auto& a = x.rational_part();
  const auto& b = x.sqrt5_part();
  return Json::array({integer_json(a.get_num()), integer_json(a.get_den()), integer_json(b.get_num()),
                      integer_json(b.get_den())});
}

Golden golden_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw InvalidArgument("golden value must be [a_num, a_den, b_num, b_den]");
  return Golden(rational_from_json(j[0], j[1]), rational_from_json(j[2], j[3]));
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.coefficients()) coeffs.push_back(Json::array({integer_json(q.get_num()), integer_json(q.get_den())}));
  return Json{{"field_order", x.field() ? x.field()->order() : 1}, {"coefficients", coeffs}};
}

Json to_json(const MultiPoly<Golden>& p) {
  return Json{{"vars", vars_json(p.vars())}, {"terms", terms_json(p, golden_coeff)}};
}

MultiPoly<Golden> poly_from_json(const Json& j) {
  if (!j.contains("vars") || !j.contains("terms")) throw InvalidArgument("polynomial JSON needs vars and terms");
  return terms_from_json(make_vars(j["vars"].get<std::vector<std::string>>()), j["terms"]);
}

Json to_json(const MultiPoly<Cyclotomic>& p) {
  int order = 1;
  for (const auto& [e, c] : p.terms())
    if (c.field()) order = c.field()->order();
  return Json{{"vars", vars_json(p.vars())}, {"field_order", order}, {"terms", terms_json(p, cyclotomic_coeff)}};
}

Json to_json(const RationalVF<Golden>& v) {
  Json nums = Json::array();
  for (const auto& n : v.numerators()) nums.push_back(terms_json(n, golden_coeff));
  return Json{{"vars", vars_json(v.vars())}, {"numerators", nums}, {"denominator", terms_json(v.denominator(), golden_coeff)}};
}

RationalVF<Golden> field_from_json(const Json& j) {
  if (!j.contains("vars") || !j.contains("numerators") || !j.contains("denominator"))
    throw InvalidArgument("field JSON needs vars, numerators and denominator");
  auto vars = make_vars(j["vars"].get<std::vector<std::string>>());
  std::vector<MultiPoly<Golden>> nums;
  for (const auto& n : j["numerators"]) nums.push_back(terms_from_json(vars, n));
  return RationalVF<Golden>(nums, terms_from_json(vars, j["denominator"]), false);
}

Json to_json(const RationalVF<Cyclotomic>& v) {
  Json nums = Json::array();
  for (const auto& n : v.numerators()) nums.push_back(to_json(n)["terms"]);
  return Json{{"vars", vars_json(v.vars())},
              {"field_order", to_json(v.denominator())["field_order"]},
              {"numerators", nums},
              {"denominator", to_json(v.denominator())["terms"]}};
}

Json matrix_to_json(const ExactMatrix<Golden>& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(m(r, c)));
  return out;
}

Json matrix_to_json(const ExactMatrix<Cyclotomic>& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(m(r, c))["coefficients"]);
  return out;
}

template <class S>
Json to_json(const MatrixGroup<S>& g) {
  Json elements = Json::array();
  for (const auto& e : g.elements) elements.push_back(matrix_to_json(e));
  return Json{{"tag", g.tag}, {"order", g.order()}, {"dim", g.dim()}, {"elements", elements}};
}

template Json to_json(const MatrixGroup<Golden>&);
template Json to_json(const MatrixGroup<Cyclotomic>&);

std::string dump_json(const Json& j, int indent) {
  std::ostringstream out;
  write_json(out, j, indent, 0);
  return out.str();
}

Golden parse_golden(const std::string& text) { return GoldenParser(text).parse(); }

}  // namespace superflow
