#include "lojax/ideal.hpp"

#include "lojax/error.hpp"
#include "lojax/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace lojax {

namespace {

bool divides(const ZVec& a, const ZVec& b) {  // x^a | x^b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<ZVec> minimalize(std::vector<ZVec> gens) {
  std::sort(gens.begin(), gens.end(), LexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ZVec> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) keep.push_back(gens[i]);
  }
  return keep;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<ZVec> generators,
                             std::vector<std::string> var_names) {
  check_dimension(num_vars);
  if (generators.empty()) throw_invalid("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != num_vars) throw_invalid("generator arity mismatch");
    for (const auto& e : g)
      if (e < 0) throw_invalid("negative exponent in generator");
  }
  n_ = num_vars;
  gens_ = minimalize(std::move(generators));
  vars_ = var_names.empty() ? default_var_names(num_vars) : std::move(var_names);
  if (static_cast<int>(vars_.size()) != num_vars) throw_invalid("variable name count mismatch");
}

MonomialIdeal MonomialIdeal::zero(int num_vars, std::vector<std::string> var_names) {
  check_dimension(num_vars);
  MonomialIdeal z;
  z.n_ = num_vars;
  z.vars_ = var_names.empty() ? default_var_names(num_vars) : std::move(var_names);
  return z;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 &&
         std::all_of(gens_[0].begin(), gens_[0].end(), [](const Int& e) { return e == 0; });
}

std::string MonomialIdeal::to_string() const {
  if (is_zero()) return "<0>";
  std::ostringstream os;
  os << "<";
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (g) os << ", ";
    bool any = false;
    for (int i = 0; i < n_; ++i) {
      if (gens_[g][i] == 0) continue;
      if (any) os << "*";
      os << vars_[i];
      if (gens_[g][i] != 1) os << "^" << gens_[g][i];
      any = true;
    }
    if (!any) os << "1";
  }
  os << ">";
  return os.str();
}

std::vector<std::string> default_var_names(int n) {
  static const char* small[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(n <= 3 ? small[i] : "x" + std::to_string(i + 1));
  return names;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw_invalid("ideal_sum: arity mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<ZVec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.num_vars(), std::move(gens), a.var_names());
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw_invalid("ideal_product: arity mismatch");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.num_vars(), a.var_names());
  std::vector<ZVec> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      ZVec s(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] + h[i];
      gens.push_back(std::move(s));
    }
  return MonomialIdeal(a.num_vars(), std::move(gens), a.var_names());
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int s) {
  if (s < 0) throw_invalid("ideal_power: negative exponent");
  if (s == 0)
    return MonomialIdeal(a.num_vars(), {ZVec(a.num_vars(), Int(0))}, a.var_names());
  MonomialIdeal out = a;
  for (int i = 1; i < s; ++i) out = ideal_product(out, a);
  return out;
}

MonomialIdeal maximal_ideal(int n) { return maximal_power(n, 1); }

MonomialIdeal maximal_power(int n, int r) {
  check_dimension(n);
  if (r < 1) throw_invalid("maximal_power: exponent must be >= 1");
  std::vector<ZVec> gens;
  ZVec cur(n, Int(0));
  // Enumerate compositions of r into n nonnegative parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      gens.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, r);
  return MonomialIdeal(n, std::move(gens));
}

namespace {

MonomialIdeal restrict_impl(const MonomialIdeal& a, const std::vector<int>& axes, bool embed) {
  if (axes.empty()) throw_invalid("restrict: empty axis set");
  std::vector<bool> in(a.num_vars(), false);
  for (int ax : axes) {
    if (ax < 0 || ax >= a.num_vars()) throw_invalid("restrict: axis out of range");
    in[ax] = true;
  }
  std::vector<ZVec> gens;
  for (const auto& g : a.generators()) {
    bool supported = true;
    for (int i = 0; i < a.num_vars() && supported; ++i)
      if (!in[i] && g[i] != 0) supported = false;
    if (!supported) continue;
    if (embed) {
      gens.push_back(g);
    } else {
      ZVec r;
      for (int ax : axes) r.push_back(g[ax]);
      gens.push_back(std::move(r));
    }
  }
  if (embed) {
    if (gens.empty()) return MonomialIdeal::zero(a.num_vars(), a.var_names());
    return MonomialIdeal(a.num_vars(), std::move(gens), a.var_names());
  }
  std::vector<std::string> names;
  for (int ax : axes) names.push_back(a.var_names()[ax]);
  if (gens.empty()) return MonomialIdeal::zero(static_cast<int>(axes.size()), std::move(names));
  return MonomialIdeal(static_cast<int>(axes.size()), std::move(gens), std::move(names));
}

}  // namespace

MonomialIdeal restrict_to(const MonomialIdeal& a, const std::vector<int>& axes) {
  std::vector<int> sorted = axes;
  std::sort(sorted.begin(), sorted.end());
  return restrict_impl(a, sorted, /*embed=*/false);
}

MonomialIdeal restrict_embedded(const MonomialIdeal& a, const std::vector<int>& axes) {
  std::vector<int> sorted = axes;
  std::sort(sorted.begin(), sorted.end());
  return restrict_impl(a, sorted, /*embed=*/true);
}

Int ideal_order(const MonomialIdeal& a) {
  if (a.is_zero()) throw_invalid("order of the zero ideal");
  Int best = -1;
  for (const auto& g : a.generators()) {
    Int s = 0;
    for (const auto& e : g) s += e;
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace lojax
