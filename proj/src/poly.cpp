#include "ssi/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace ssi {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponent{1}, Rational(1));
  return p;
}

Poly Poly::monomial(const Rational& c, const std::vector<std::string>& vars, const Exponent& e) {
  TermMap t;
  if (c != 0) t.emplace(e, c);
  return from_terms(vars, t);
}

Poly Poly::from_terms(std::vector<std::string> vars, const TermMap& terms) {
  // Sort variables and permute exponent vectors accordingly.
  std::vector<std::size_t> order(vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return vars[i] < vars[j]; });
  std::vector<std::string> sorted;
  std::vector<std::vector<std::size_t>> groups;  // duplicates collapse
  for (std::size_t idx : order) {
    if (!sorted.empty() && sorted.back() == vars[idx]) {
      groups.back().push_back(idx);
    } else {
      sorted.push_back(vars[idx]);
      groups.push_back({idx});
    }
  }
  Poly p;
  p.vars_ = std::move(sorted);
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Exponent ne(p.vars_.size(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t idx : groups[g]) ne[g] += e[idx];
    }
    auto [it, inserted] = p.terms_.emplace(std::move(ne), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  p.compact();
  return p;
}

void Poly::compact() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) used[i] = true;
    }
  }
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) nv.push_back(vars_[i]);
  }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exponent ne;
    ne.reserve(nv.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) ne.push_back(e[i]);
    }
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

Poly::TermMap Poly::terms_over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    pos[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return out;
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

bool Poly::has_var(const std::string& name) const { return var_index(name) >= 0; }

int Poly::var_index(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return -1;
  return static_cast<int>(it - vars_.begin());
}

int Poly::degree(const std::string& name) const {
  int idx = var_index(name);
  if (terms_.empty()) return -1;
  if (idx < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(idx)]);
  return d;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Rational Poly::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

std::vector<Poly> Poly::coefficients(const std::string& var) const {
  std::vector<Poly> out;
  if (terms_.empty()) return out;
  int idx = var_index(var);
  if (idx < 0) return {*this};
  std::size_t k = static_cast<std::size_t>(idx);
  std::vector<TermMap> buckets(static_cast<std::size_t>(degree(var)) + 1);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    std::size_t power = static_cast<std::size_t>(ne[k]);
    ne[k] = 0;
    buckets[power].emplace(std::move(ne), c);
  }
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(vars_, b));
  return out;
}

Poly Poly::from_coefficients(const std::string& var, const std::vector<Poly>& coeffs) {
  Poly out;
  Poly x = variable(var);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    out = out * x + coeffs[i];
  }
  return out;
}

Poly Poly::leading_coeff(const std::string& var) const {
  auto cs = coefficients(var);
  if (cs.empty()) return Poly();
  return cs.back();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (vars_ != o.vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    terms_ = terms_over(vars);
    vars_ = std::move(vars);
    for (const auto& [e, c] : o.terms_over(vars_)) {
      auto [it, inserted] = terms_.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
  } else {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }
  compact();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  std::vector<std::string> vars = a.vars_ == b.vars_ ? a.vars_ : merge_vars(a.vars_, b.vars_);
  Poly::TermMap ta = a.terms_over(vars);
  Poly::TermMap tb = b.terms_over(vars);
  Poly out;
  out.vars_ = vars;
  Exponent e(vars.size());
  Rational prod;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  out.compact();
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    vars_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size() || a.vars_ != b.vars_) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(const std::string& var) const {
  int idx = var_index(var);
  if (idx < 0) return Poly();
  std::size_t k = static_cast<std::size_t>(idx);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent ne = e;
    ne[k] -= 1;
    out.emplace(std::move(ne), c * e[k]);
  }
  return from_terms(vars_, out);
}

Poly Poly::substitute(const std::string& var, const Poly& value) const {
  if (!has_var(var)) return *this;
  auto cs = coefficients(var);
  Poly out;
  for (std::size_t i = cs.size(); i-- > 0;) {
    out = out * value + cs[i];
  }
  return out;
}

Poly Poly::substitute(const std::string& var, const Rational& value) const {
  int idx = var_index(var);
  if (idx < 0) return *this;
  std::size_t k = static_cast<std::size_t>(idx);
  int deg = degree(var);
  std::vector<Rational> powers(static_cast<std::size_t>(deg) + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * value;
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    Rational term = c * powers[static_cast<std::size_t>(ne[k])];
    ne[k] = 0;
    if (term == 0) continue;
    auto [it, inserted] = out.emplace(std::move(ne), term);
    if (!inserted) {
      it->second += term;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return from_terms(vars_, out);
}

Rational Poly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) throw Error("evaluate: variable '" + vars_[i] + "' is not assigned");
    int deg = degree(vars_[i]);
    powers[i].resize(static_cast<std::size_t>(deg) + 1);
    powers[i][0] = 1;
    for (std::size_t k = 1; k < powers[i].size(); ++k) powers[i][k] = powers[i][k - 1] * it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= powers[i][static_cast<std::size_t>(e[i])];
    sum += term;
  }
  return sum;
}

Poly Poly::rename(const std::map<std::string, std::string>& renaming) const {
  std::vector<std::string> nv = vars_;
  for (auto& v : nv) {
    auto it = renaming.find(v);
    if (it != renaming.end()) v = it->second;
  }
  return from_terms(nv, terms_);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    Rational mag = ssi::abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (is_const) {
      out += ssi::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += ssi::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace ssi
