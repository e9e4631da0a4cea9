#include "spinmap/constraints.hpp"

#include "spinmap/error.hpp"
#include "spinmap/linear_solve.hpp"
#include "spinmap/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace spinmap {

namespace {

const CouplingForm& form(std::string_view name) { return tabulated_formulas()[LayerCouplings::index_of(name)]; }

/// Conditions shared by every constrained model: all four- and six-spin
/// constants and the cross terms K_{a,b} (a < b) vanish.
std::vector<CouplingForm> two_spin_only() {
  std::vector<CouplingForm> out;
  for (std::string_view name : {"R", "R123", "R213", "R312", "R132", "R231", "R321", "R12", "R13", "R23", "K12",
                                "K13", "K23"}) {
    out.push_back(form(name));
  }
  return out;
}

/// Solves conditions[k] = 0 for every symbol not listed in `params`.
SpinCouplings solve_conditions(const std::vector<CouplingForm>& conditions, std::int64_t gamma,
                               const std::map<Symbol, BigRational>& params) {
  SpinCouplings out(7, gamma);
  std::vector<Symbol> unknowns;
  for (const Symbol& sym : coupling_symbols(7)) {
    if (auto it = params.find(sym); it != params.end()) {
      out.set(sym, it->second);
    } else {
      unknowns.push_back(sym);
    }
  }

  RationalMatrix a(conditions.size(), unknowns.size());
  std::vector<BigRational> rhs(conditions.size());
  for (std::size_t r = 0; r < conditions.size(); ++r) {
    for (const auto& [sym, coeff] : conditions[r].terms()) {
      const BigRational scale = sym.kind == Symbol::Kind::Field ? coeff * BigRational(gamma) : coeff;
      const auto it = std::find(unknowns.begin(), unknowns.end(), sym);
      if (it != unknowns.end()) {
        a(r, static_cast<std::size_t>(it - unknowns.begin())) = scale;
      } else {
        rhs[r] -= scale * out.get(sym);
      }
    }
  }
  const auto x = linear_solve(a, rhs);
  for (std::size_t k = 0; k < unknowns.size(); ++k) out.set(unknowns[k], x[k]);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Inconsistent, "constrained solution violates " + what);
}

void require_two_spin_only(const LayerCouplings& k) {
  for (std::string_view name : {"R", "R123", "R213", "R312", "R132", "R231", "R321", "R12", "R13", "R23", "K12",
                                "K13", "K23"}) {
    require(k.at(name).is_zero(), std::string(name) + " = 0");
  }
}

}  // namespace

PeriodicModel solve_periodic_constraints(const BigRational& J77, const BigRational& h6, std::int64_t gamma) {
  auto conditions = two_spin_only();
  conditions.push_back(form("K11") - form("K22"));
  conditions.push_back(form("K22") - form("K33"));
  conditions.push_back(form("K21") - form("K31"));
  conditions.push_back(form("K31") - form("K32"));

  PeriodicModel out{solve_conditions(conditions, gamma, {{Symbol::coupling(7, 7), J77}, {Symbol::field(6), h6}}),
                    {}, {}, {}};
  out.layers = reduce_couplings_7_2(out.couplings);
  const LayerCouplings& k = out.layers;
  require_two_spin_only(k);
  require(k.at("K11") == k.at("K22") && k.at("K22") == k.at("K33"), "K11 = K22 = K33");
  require(k.at("K21") == k.at("K31") && k.at("K31") == k.at("K32"), "K21 = K31 = K32");
  out.K1 = k.at("K11");
  out.K2 = k.at("K21") / BigRational(gamma);
  return out;
}

FreeModel solve_free_constraints(const BigRational& J77, const BigRational& h6, std::int64_t gamma) {
  auto conditions = two_spin_only();
  conditions.push_back(form("K11") - form("K22"));
  conditions.push_back(form("K22") - form("K33"));
  conditions.push_back(form("K21") - form("K32"));
  conditions.push_back(form("K31"));

  FreeModel out{solve_conditions(conditions, gamma, {{Symbol::coupling(7, 7), J77}, {Symbol::field(6), h6}}), {},
                {}, {}};
  out.layers = reduce_couplings_7_2(out.couplings);
  const LayerCouplings& k = out.layers;
  require_two_spin_only(k);
  require(k.at("K11") == k.at("K22") && k.at("K22") == k.at("K33"), "K11 = K22 = K33");
  require(k.at("K21") == k.at("K32"), "K21 = K32");
  require(k.at("K31").is_zero(), "K31 = 0");
  out.K1 = k.at("K11");
  out.K3 = k.at("K21") / BigRational(gamma);
  return out;
}

ExactModel solve_exact_case(const BigRational& J55, const BigRational& J57, const BigRational& J77) {
  auto conditions = two_spin_only();
  for (std::string_view glue : {"K21", "K31", "K32"}) conditions.push_back(form(glue));

  ExactModel out{solve_conditions(conditions, 1,
                                 {{Symbol::coupling(5, 5), J55}, {Symbol::coupling(5, 7), J57}, {Symbol::coupling(7, 7), J77}}),
                 {}, {}, {}, {}};
  out.layers = reduce_couplings_7_2(out.couplings);
  const LayerCouplings& k = out.layers;
  require_two_spin_only(k);
  for (std::string_view glue : {"K21", "K31", "K32"}) require(k.at(glue).is_zero(), std::string(glue) + " = 0");
  out.K11 = k.at("K11");
  out.K22 = k.at("K22");
  out.K33 = k.at("K33");
  return out;
}

}  // namespace spinmap
