#include "spinmap/cli.hpp"

#include "spinmap/bijection.hpp"
#include "spinmap/constraints.hpp"
#include "spinmap/errata.hpp"
#include "spinmap/error.hpp"
#include "spinmap/partition.hpp"
#include "spinmap/reduction.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

namespace spinmap::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;
  std::string format = "text";
  std::optional<std::uint64_t> limit;
  bool allow_large = false;

  int p = 2;
  int M = 2;
  std::string couplings;
  std::string which;
  std::string J77 = "1", h6 = "1", J55 = "0", J57 = "0";
  std::int64_t gamma = 1;
  bool symbolic = false;
  std::optional<double> J, h;
};

std::uint64_t pick_limit(const Options& o, std::uint64_t fallback) {
  if (!o.limit) return fallback;
  if (*o.limit > fallback && !o.allow_large) {
    throw UsageError("--limit " + std::to_string(*o.limit) + " is above the default " + std::to_string(fallback) +
                     "; add --allow-large to confirm");
  }
  return *o.limit;
}

std::string number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

void line(std::ostream& os, const Options& o, std::string_view key, std::string_view value) {
  if (o.format == "tsv") {
    os << key << '\t' << value << '\n';
  } else {
    os << key << " = " << value << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string cluster_header(const ClusterSpec& spec) {
  return "# p = " + std::to_string(spec.p()) + ", M = " + std::to_string(spec.cluster_size()) + ", S = " +
         spec.spin().str() + "\n";
}

int cmd_inverse(const Options& o, std::ostream& os) {
  const ClusterSpec spec(o.p, o.M, pick_limit(o, kDefaultTableLimit));
  const auto polys = inverse_polynomials(spec, pick_limit(o, kDefaultPolynomialLimit));
  os << cluster_header(spec);
  for (int i = 1; i <= spec.cluster_size(); ++i) {
    line(os, o, "sigma[weight " + std::to_string(spec.weight(i)) + "]", polys[static_cast<std::size_t>(i - 1)].str());
  }
  os << '\n' << projection_table(spec).to_tsv(spec);
  return kExitOk;
}

int cmd_roundtrip(const Options& o, std::ostream& os) {
  const ClusterSpec spec(o.p, o.M, pick_limit(o, kDefaultTableLimit));
  const RoundTripReport report = verify_roundtrip(spec, pick_limit(o, kDefaultPolynomialLimit));
  os << report.summary(spec);
  return report.passed ? kExitOk : kExitDomain;
}

int cmd_reduce(const Options& o, std::ostream& os) {
  const SpinCouplings c = SpinCouplings::parse(read_file(o.couplings), 7);
  const LayerCouplings k = reduce_couplings_7_2(c);
  const EquivalenceResult eq = equivalence_check(c, k);
  for (std::size_t n = 0; n < LayerCouplings::kCount; ++n) line(os, o, LayerCouplings::names()[n], k[n].str());
  line(os, o, "offset", eq.offset.str());
  os << "# equivalence " << (eq.equivalent ? "holds" : "FAILS") << " over " << eq.configurations_checked
     << " bond configurations\n";
  return eq.equivalent ? kExitOk : kExitDomain;
}

int cmd_derive(const Options& o, std::ostream& os) {
  const ClusterSpec spec(o.p, o.M, pick_limit(o, kDefaultTableLimit));
  const DerivedReduction d = derive_reduction(spec, pick_limit(o, kDefaultDeriveLimit));
  os << cluster_header(spec);
  for (const auto& [pattern, form] : d.terms) line(os, o, d.pattern_name(pattern), form.str());
  if (o.p == 2 && o.M == 3) {
    const LayerFormulas f = layer_formulas(d);
    os << "# layer constants\n";
    for (std::size_t n = 0; n < LayerCouplings::kCount; ++n) line(os, o, LayerCouplings::names()[n], f.constants[n].str());
    line(os, o, "offset", f.offset.str());
  }
  return kExitOk;
}

void write_model(std::ostream& os, const SpinCouplings& c, const LayerCouplings& k) {
  os << c.to_text();
  os << "# layer constants:";
  for (std::size_t n = 0; n < LayerCouplings::kCount; ++n) {
    if (!k[n].is_zero()) os << ' ' << LayerCouplings::names()[n] << '=' << k[n].str();
  }
  os << '\n';
}

int cmd_solve(const Options& o, std::ostream& os) {
  if (o.which == "periodic") {
    const PeriodicModel m = solve_periodic_constraints(BigRational::parse(o.J77), BigRational::parse(o.h6), o.gamma);
    os << "# case = periodic\n# K1 = " << m.K1.str() << "\n# K2 = " << m.K2.str() << '\n';
    write_model(os, m.couplings, m.layers);
  } else if (o.which == "free") {
    const FreeModel m = solve_free_constraints(BigRational::parse(o.J77), BigRational::parse(o.h6), o.gamma);
    os << "# case = free\n# K1 = " << m.K1.str() << "\n# K3 = " << m.K3.str() << '\n';
    write_model(os, m.couplings, m.layers);
  } else {
    const ExactModel m =
        solve_exact_case(BigRational::parse(o.J55), BigRational::parse(o.J57), BigRational::parse(o.J77));
    os << "# case = exact\n# K11 = " << m.K11.str() << "\n# K22 = " << m.K22.str() << "\n# K33 = " << m.K33.str()
       << '\n';
    write_model(os, m.couplings, m.layers);
  }
  return kExitOk;
}

int cmd_partition(const Options& o, std::ostream& os) {
  if (o.symbolic == (o.J.has_value() || o.h.has_value())) {
    throw UsageError("partition needs either --symbolic or both --J and --h");
  }
  if (o.symbolic) {
    const auto limit = pick_limit(o, kDefaultChainLimit);
    const ChainSpec chain(o.M, static_cast<int>(std::min<std::uint64_t>(limit, 63)));
    os << partition_symbolic(chain).str();
    return kExitOk;
  }
  if (!o.J || !o.h) throw UsageError("partition needs both --J and --h");
  const ChainSpec chain(o.M, std::numeric_limits<int>::max());
  const double ln_closed = log_partition_closed_form(chain, *o.J, *o.h);
  line(os, o, "ln_Z", number(ln_closed));
  line(os, o, "ln_Z_transfer", number(log_transfer_matrix_partition(chain, *o.J, *o.h)));
  const double z = std::exp(ln_closed);
  line(os, o, "Z", std::isfinite(z) ? number(partition_closed_form(chain, *o.J, *o.h)) : "overflow");
  return kExitOk;
}

int cmd_free_energy(const Options& o, std::ostream& os) {
  line(os, o, "f", number(free_energy(*o.J, *o.h)));
  line(os, o, "eigenvalue_ratio", number(eigenvalue_ratio(*o.J, *o.h)));
  return kExitOk;
}

int cmd_errata(std::ostream& os) {
  os << errata_report();
  for (const Erratum& e : errata()) {
    if (e.literal_holds() || !e.corrected_holds()) return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact spin-S <-> spin-sigma cluster mappings and Ising chain partition functions", "spinmap"};
  app.set_help_flag("--help", "Print this help and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--output,-o", o.output, "Write results to FILE instead of stdout");
  app.add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--limit", o.limit, "Override the size limit of the selected operation");
  app.add_flag("--allow-large", o.allow_large, "Allow --limit above the default");

  const auto cluster = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "Levels per layer spin (2 sigma + 1)")->required()->check(CLI::Range(2, 1 << 20));
    sub->add_option("--M", o.M, "Cluster size")->required()->check(CLI::Range(1, 64));
  };
  CLI::App* inverse = app.add_subcommand("inverse", "Inverse polynomials and projection table");
  cluster(inverse);
  CLI::App* roundtrip = app.add_subcommand("roundtrip", "Exhaustive bijection check");
  cluster(roundtrip);
  CLI::App* reduce = app.add_subcommand("reduce", "Three-layer constants of a spin-7/2 coupling file");
  reduce->add_option("--couplings", o.couplings, "Coupling file")->required();
  CLI::App* derive = app.add_subcommand("derive", "Generic reduction as linear forms in the couplings");
  cluster(derive);
  CLI::App* solve = app.add_subcommand("solve", "Constrained spin-7/2 models");
  solve->add_option("--case", o.which)->required()->check(CLI::IsMember({"periodic", "free", "exact"}));
  solve->add_option("--J77", o.J77, "rational");
  solve->add_option("--h6", o.h6, "rational");
  solve->add_option("--J55", o.J55, "rational");
  solve->add_option("--J57", o.J57, "rational");
  solve->add_option("--gamma", o.gamma, "integer >= 1");
  CLI::App* partition = app.add_subcommand("partition", "Periodic Ising chain partition function");
  partition->add_option("--M", o.M, "Chain length")->required();
  partition->add_flag("--symbolic", o.symbolic, "Print the exponent multiset");
  partition->add_option("--J", o.J);
  partition->add_option("--h", o.h);
  CLI::App* free = app.add_subcommand("free-energy", "Thermodynamic-limit free energy");
  free->add_option("--J", o.J)->required();
  free->add_option("--h", o.h)->required();
  CLI::App* errata_cmd = app.add_subcommand("errata", "Documented misprints with live checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (inverse->parsed()) {
      code = cmd_inverse(o, buffer);
    } else if (roundtrip->parsed()) {
      code = cmd_roundtrip(o, buffer);
    } else if (reduce->parsed()) {
      code = cmd_reduce(o, buffer);
    } else if (derive->parsed()) {
      code = cmd_derive(o, buffer);
    } else if (solve->parsed()) {
      code = cmd_solve(o, buffer);
    } else if (partition->parsed()) {
      code = cmd_partition(o, buffer);
    } else if (free->parsed()) {
      code = cmd_free_energy(o, buffer);
    } else if (errata_cmd->parsed()) {
      code = cmd_errata(buffer);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write " << o.output << '\n';
      return kExitDomain;
    }
  }
  return code;
}

}  // namespace spinmap::cli
