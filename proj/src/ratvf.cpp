#include "superflow/ratvf.hpp"

#include <sstream>

#include "superflow/errors.hpp"

namespace superflow {

template <class S>
RationalVF<S>::RationalVF(std::vector<MultiPoly<S>> numerators, MultiPoly<S> denominator, bool check_homogeneity)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidArgument("zero denominator");
  for (auto& n : num_) n += MultiPoly<S>(den_.vars());
  for (const auto& n : num_)
    if (n.num_vars() != den_.num_vars()) throw DimensionMismatch("numerator and denominator rings differ");
  if (check_homogeneity) {
    const int d = den_.homogeneous_degree();
    if (d < 0) throw InvalidArgument("denominator is not homogeneous");
    for (const auto& n : num_)
      if (!n.is_homogeneous(d + 2)) throw InvalidArgument("numerator is not of degree deg(den) + 2");
  }
}

template <class S>
RationalVF<S> RationalVF<S>::polynomial(std::vector<MultiPoly<S>> numerators, bool check_homogeneity) {
  VarList vars;
  for (const auto& n : numerators)
    if (n.vars()) vars = n.vars();
  if (!vars) throw InvalidArgument("polynomial field needs variables");
  return RationalVF(std::move(numerators), MultiPoly<S>::constant(vars, S(1)), check_homogeneity);
}

template <class S>
bool RationalVF<S>::is_zero() const {
  for (const auto& n : num_)
    if (!n.is_zero()) return false;
  return true;
}

template <class S>
bool RationalVF<S>::is_two_homogeneous() const {
  const int d = den_.homogeneous_degree();
  if (d < 0) return false;
  for (const auto& n : num_)
    if (!n.is_homogeneous(d + 2)) return false;
  return true;
}

template <class S>
std::vector<std::complex<double>> RationalVF<S>::evaluate_complex(const std::vector<std::complex<double>>& x) const {
  std::complex<double> d = den_.evaluate_complex(x);
  std::vector<std::complex<double>> out;
  for (const auto& n : num_) out.push_back(n.evaluate_complex(x) / d);
  return out;
}

template <class S>
std::vector<double> RationalVF<S>::evaluate_double(const std::vector<double>& x) const {
  double d = den_.evaluate_double(x);
  std::vector<double> out;
  for (const auto& n : num_) out.push_back(n.evaluate_double(x) / d);
  return out;
}

template <class S>
std::vector<S> RationalVF<S>::evaluate(const std::vector<S>& x) const {
  S d = den_.evaluate(x);
  if (d.is_zero()) throw DivisionByZero();
  S inv = d.inverse();
  std::vector<S> out;
  for (const auto& n : num_) out.push_back(n.evaluate(x) * inv);
  return out;
}

template <class S>
RationalVF<S> RationalVF<S>::scaled(const S& c) const {
  std::vector<MultiPoly<S>> n = num_;
  for (auto& p : n) p *= c;
  return RationalVF(std::move(n), den_, false);
}

template <class S>
RationalVF<S> RationalVF<S>::normalized() const {
  std::vector<MultiPoly<S>> n = num_;
  for (const auto& p : num_)
    if (!p.is_zero()) {
      S s = p.leading_coefficient().inverse();
      for (auto& q : n) q *= s;
      break;
    }
  return RationalVF(std::move(n), den_, false);
}

template <class S>
std::string RationalVF<S>::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) os << " • ";
    os << "[" << num_[i].to_string() << "]";
  }
  os << " / [" << den_.to_string() << "]";
  return os.str();
}

namespace {

template <class S>
RationalFunction<S> make_monic(MultiPoly<S> num, MultiPoly<S> den) {
  S s = den.leading_coefficient().inverse();
  num *= s;
  den *= s;
  return {std::move(num), std::move(den)};
}

}  // namespace

template <class S>
RationalFunction<S> divergence(const RationalVF<S>& v) {
  const auto& d = v.denominator();
  MultiPoly<S> num(d.vars());
  for (int i = 0; i < v.dim(); ++i) {
    const auto& n = v.numerator(i);
    num += n.derivative(i) * d - n * d.derivative(i);
  }
  return make_monic(std::move(num), d * d);
}

template <class S>
std::array<RationalFunction<S>, 3> curl(const RationalVF<S>& v) {
  if (v.dim() != 3 || v.vars()->size() != 3) throw DimensionMismatch("curl needs a 3-dimensional field");
  const auto& d = v.denominator();
  const auto d2 = d * d;
  auto partial = [&](int comp, int var) { return v.numerator(comp).derivative(var) * d - v.numerator(comp) * d.derivative(var); };
  return {make_monic(partial(2, 1) - partial(1, 2), d2), make_monic(partial(0, 2) - partial(2, 0), d2),
          make_monic(partial(1, 0) - partial(0, 1), d2)};
}

template <class S>
RationalVF<S> conjugation_action(const RationalVF<S>& v, const ExactMatrix<S>& g) {
  if (g.rows() != v.dim() || g.cols() != v.dim()) throw DimensionMismatch("conjugation: matrix size");
  ExactMatrix<S> ginv = exact_inverse<S>(g);
  std::vector<MultiPoly<S>> moved;
  for (const auto& n : v.numerators()) moved.push_back(n.compose_linear(g));
  std::vector<MultiPoly<S>> out;
  for (int i = 0; i < v.dim(); ++i) {
    MultiPoly<S> acc(v.vars());
    for (int j = 0; j < v.dim(); ++j)
      if (!ginv(i, j).is_zero()) acc += moved[j] * ginv(i, j);
    out.push_back(std::move(acc));
  }
  return RationalVF<S>(std::move(out), v.denominator().compose_linear(g), false);
}

template <class S>
bool fields_equal(const RationalVF<S>& a, const RationalVF<S>& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (!(a.numerator(i) * b.denominator() == b.numerator(i) * a.denominator())) return false;
  return true;
}

template <class S>
std::optional<S> proportionality_factor(const RationalVF<S>& a, const RationalVF<S>& b) {
  if (a.dim() != b.dim() || b.is_zero()) return std::nullopt;
  std::vector<MultiPoly<S>> lhs, rhs;
  for (int i = 0; i < a.dim(); ++i) {
    lhs.push_back(a.numerator(i) * b.denominator());
    rhs.push_back(b.numerator(i) * a.denominator());
  }
  std::optional<S> c;
  for (int i = 0; i < a.dim(); ++i) {
    if (rhs[i].is_zero()) {
      if (!lhs[i].is_zero()) return std::nullopt;
      continue;
    }
    const auto& [e, coeff] = *rhs[i].terms().begin();
    S ratio = lhs[i].coefficient(e) / coeff;
    if (c && !(*c == ratio)) return std::nullopt;
    c = ratio;
  }
  if (!c || c->is_zero()) return std::nullopt;
  for (int i = 0; i < a.dim(); ++i)
    if (!(lhs[i] == rhs[i] * *c)) return std::nullopt;
  return c;
}

template <class S>
MultiPoly<S> lie_derivative_numerator(const MultiPoly<S>& f, const RationalVF<S>& v) {
  MultiPoly<S> acc(v.vars());
  for (int i = 0; i < v.dim(); ++i) acc += f.derivative(i) * v.numerator(i);
  return acc;
}

template <class S>
std::optional<MultiPoly<S>> exact_divide(const MultiPoly<S>& p, const MultiPoly<S>& d) {
  if (d.is_zero()) throw DivisionByZero();
  // Division by the leading term in the canonical (lexicographic) order.
  const auto& [lead_e, lead_c] = *d.terms().rbegin();
  S lead_inv = lead_c.inverse();
  MultiPoly<S> rem = p;
  MultiPoly<S> quot(d.vars());
  rem += MultiPoly<S>(d.vars());
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    typename MultiPoly<S>::Exponent q(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      q[k] = e[k] - lead_e[k];
      if (q[k] < 0) return std::nullopt;
    }
    auto term = MultiPoly<S>::monomial(d.vars(), q, c * lead_inv);
    quot += term;
    rem -= term * d;
  }
  return quot;
}

RationalVF<Cyclotomic> to_cyclotomic(const RationalVF<Golden>& v, const CyclotomicFieldPtr& field) {
  std::vector<MultiPoly<Cyclotomic>> n;
  for (const auto& p : v.numerators()) n.push_back(to_cyclotomic(p, field));
  return RationalVF<Cyclotomic>(std::move(n), to_cyclotomic(v.denominator(), field), false);
}

RationalVF<Golden> golden_conjugate(const RationalVF<Golden>& v) {
  std::vector<MultiPoly<Golden>> n;
  for (const auto& p : v.numerators()) n.push_back(golden_conjugate(p));
  return RationalVF<Golden>(std::move(n), golden_conjugate(v.denominator()), false);
}

template class RationalVF<Golden>;
template class RationalVF<Cyclotomic>;

#define SUPERFLOW_INSTANTIATE(S)                                                           \
  template RationalFunction<S> divergence(const RationalVF<S>&);                           \
  template std::array<RationalFunction<S>, 3> curl(const RationalVF<S>&);                  \
  template RationalVF<S> conjugation_action(const RationalVF<S>&, const ExactMatrix<S>&);  \
  template bool fields_equal(const RationalVF<S>&, const RationalVF<S>&);                  \
  template std::optional<S> proportionality_factor(const RationalVF<S>&, const RationalVF<S>&); \
  template MultiPoly<S> lie_derivative_numerator(const MultiPoly<S>&, const RationalVF<S>&);    \
  template std::optional<MultiPoly<S>> exact_divide(const MultiPoly<S>&, const MultiPoly<S>&);

SUPERFLOW_INSTANTIATE(Golden)
SUPERFLOW_INSTANTIATE(Cyclotomic)

#undef SUPERFLOW_INSTANTIATE

}  // namespace superflow
