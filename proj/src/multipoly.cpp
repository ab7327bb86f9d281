#include "superflow/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superflow/errors.hpp"

namespace superflow {

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList indexed_vars(int n, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_vars(std::move(names));
}

VarList xyz_vars() {
  static const VarList vars = make_vars({"x", "y", "z"});
  return vars;
}

namespace {

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace

template <class S>
MultiPoly<S>::MultiPoly(VarList vars) : vars_(std::move(vars)) {}

template <class S>
MultiPoly<S>::MultiPoly(VarList vars, TermMap terms) : vars_(std::move(vars)) {
  const std::size_t n = vars_ ? vars_->size() : 0;
  for (auto& [e, c] : terms) {
    if (e.size() != n) throw DimensionMismatch("exponent length does not match variables");
    for (int k : e)
      if (k < 0) throw InvalidArgument("negative exponent");
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

template <class S>
MultiPoly<S> MultiPoly<S>::constant(VarList vars, const S& c) {
  Exponent e(vars ? vars->size() : 0, 0);
  return monomial(std::move(vars), std::move(e), c);
}

template <class S>
MultiPoly<S> MultiPoly<S>::variable(VarList vars, int index) {
  if (!vars || index < 0 || index >= static_cast<int>(vars->size()))
    throw InvalidArgument("variable index out of range");
  Exponent e(vars->size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e), S(1));
}

template <class S>
MultiPoly<S> MultiPoly<S>::monomial(VarList vars, Exponent e, const S& c) {
  TermMap t;
  t.emplace(std::move(e), c);
  return MultiPoly(std::move(vars), std::move(t));
}

template <class S>
std::vector<MultiPoly<S>> MultiPoly<S>::generators(const VarList& vars) {
  std::vector<MultiPoly> out;
  for (int i = 0; i < static_cast<int>(vars->size()); ++i) out.push_back(variable(vars, i));
  return out;
}

template <class S>
bool MultiPoly<S>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree() == 0);
}

template <class S>
int MultiPoly<S>::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

template <class S>
int MultiPoly<S>::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

template <class S>
bool MultiPoly<S>::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  return true;
}

template <class S>
int MultiPoly<S>::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
  return is_homogeneous(d) ? d : -1;
}

template <class S>
S MultiPoly<S>::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
S MultiPoly<S>::constant_term() const {
  return coefficient(Exponent(num_vars(), 0));
}

template <class S>
void MultiPoly<S>::adopt(const MultiPoly& o) {
  if (same_vars(vars_, o.vars_)) return;
  if (!o.vars_) return;
  if (!vars_) {
    // Only constants can live in the variable-free ring.
    TermMap lifted;
    for (auto& [e, c] : terms_) lifted.emplace(Exponent(o.vars_->size(), 0), c);
    terms_ = std::move(lifted);
    vars_ = o.vars_;
    return;
  }
  throw DimensionMismatch("polynomials over different variables");
}

template <class S>
void MultiPoly<S>::add_term(const Exponent& e, const S& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (it->second.is_zero()) {
    terms_.erase(it);
  }
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator+=(const MultiPoly& o) {
  adopt(o);
  if (!o.vars_ && vars_) {
    for (const auto& [e, c] : o.terms_) add_term(Exponent(vars_->size(), 0), c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator-=(const MultiPoly& o) {
  return *this += -o;
}

template <class S>
MultiPoly<S> MultiPoly<S>::multiply(const MultiPoly& o) const {
  MultiPoly a = *this;
  a.adopt(o);
  MultiPoly b = o;
  b.adopt(a);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.vars_ ? a.vars_->size() : 0;
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator*=(const MultiPoly& o) {
  *this = multiply(o);
  return *this;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator*=(const S& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

template <class S>
MultiPoly<S> MultiPoly<S>::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("negative polynomial power");
  MultiPoly result = constant(vars_, S(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

template <class S>
MultiPoly<S> MultiPoly<S>::derivative(int var) const {
  if (var < 0 || var >= num_vars()) throw InvalidArgument("derivative variable out of range");
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.emplace(std::move(f), c * S(e[var]));
  }
  return MultiPoly(vars_, std::move(out));
}

template <class S>
S MultiPoly<S>::evaluate(const std::vector<S>& point) const {
  if (static_cast<int>(point.size()) != num_vars()) throw DimensionMismatch("evaluation point size");
  const int n = num_vars();
  std::vector<std::vector<S>> powers(n);
  for (int i = 0; i < n; ++i) {
    int d = std::max(degree_in(i), 0);
    powers[i].resize(d + 1);
    powers[i][0] = S(1);
    for (int k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  S acc(0);
  for (const auto& [e, c] : terms_) {
    S t = c;
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

template <class S>
std::complex<double> MultiPoly<S>::evaluate_complex(const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != num_vars()) throw DimensionMismatch("evaluation point size");
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = ScalarTraits<S>::to_complex(c);
    for (int i = 0; i < num_vars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

template <class S>
double MultiPoly<S>::evaluate_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != num_vars()) throw DimensionMismatch("evaluation point size");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = ScalarTraits<S>::to_complex(c).real();
    for (int i = 0; i < num_vars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

template <class S>
MultiPoly<S> MultiPoly<S>::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != num_vars())
    throw DimensionMismatch("substitution needs one image per variable");
  VarList target;
  for (const auto& im : images)
    if (im.vars_) {
      if (target && !same_vars(target, im.vars_)) throw DimensionMismatch("substitution images over different rings");
      target = im.vars_;
    }
  const int n = num_vars();
  std::vector<std::vector<MultiPoly>> powers(n);
  for (int i = 0; i < n; ++i) {
    int d = std::max(degree_in(i), 0);
    powers[i].push_back(constant(target, S(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly acc(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(target, c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

template <class S>
MultiPoly<S> MultiPoly<S>::compose_linear(const ExactMatrix<S>& m) const {
  const int n = num_vars();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("compose_linear: matrix size");
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    MultiPoly row(vars_);
    for (int j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) row += variable(vars_, j) * m(i, j);
    images.push_back(std::move(row));
  }
  return substitute(images);
}

template <class S>
MultiPoly<S> MultiPoly<S>::with_vars(VarList vars) const {
  if (vars->size() != static_cast<std::size_t>(num_vars()) && vars_)
    throw DimensionMismatch("with_vars: variable count");
  MultiPoly r(vars);
  for (const auto& [e, c] : terms_) r.terms_.emplace(vars_ ? e : Exponent(vars->size(), 0), c);
  return r;
}

template <class S>
MultiPoly<S> MultiPoly<S>::embed(VarList vars, const std::vector<int>& slot) const {
  if (static_cast<int>(slot.size()) != num_vars()) throw DimensionMismatch("embed: slot map size");
  MultiPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f.at(slot[i]) += e[i];
    r.add_term(f, c);
  }
  return r;
}

template <class S>
S MultiPoly<S>::leading_coefficient() const {
  if (terms_.empty()) return S(0);
  return terms_.rbegin()->second;
}

template <class S>
bool MultiPoly<S>::equals(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!same_vars(vars_, o.vars_)) {
    if (num_vars() != o.num_vars()) {
      // A variable-free constant against a constant over some ring.
      if (!is_constant() || !o.is_constant()) return false;
      return constant_term() == o.constant_term();
    }
  }
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

template <class S>
std::string MultiPoly<S>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")";
    for (int i = 0; i < num_vars(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << (*vars_)[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

MultiPoly<Cyclotomic> to_cyclotomic(const MultiPoly<Golden>& p, const CyclotomicFieldPtr& field) {
  MultiPoly<Cyclotomic>::TermMap t;
  for (const auto& [e, c] : p.terms()) t.emplace(e, to_cyclotomic(c, field));
  return MultiPoly<Cyclotomic>(p.vars(), std::move(t));
}

MultiPoly<Golden> golden_conjugate(const MultiPoly<Golden>& p) {
  return p.map_coefficients([](const Golden& c) { return golden_conjugate(c); });
}

template class MultiPoly<Golden>;
template class MultiPoly<Cyclotomic>;

}  // namespace superflow
