#include "spinmap/reduction.hpp"

#include "spinmap/error.hpp"

#include <set>
#include <sstream>

namespace spinmap {

namespace {

void check_eigenvalue(HalfInt s, int two_s) {
  if (s.doubled() < -two_s || s.doubled() > two_s || (s.doubled() - two_s) % 2 != 0) {
    throw Error(ErrorKind::SpinOutOfRange, s.str() + " is not an eigenvalue of spin " + std::to_string(two_s) + "/2");
  }
}

std::vector<BigRational> powers(const BigRational& x, int top) {
  std::vector<BigRational> out(static_cast<std::size_t>(top) + 1);
  out[0] = BigRational(1);
  for (int k = 1; k <= top; ++k) out[k] = out[k - 1] * x;
  return out;
}

}  // namespace

BigRational bond_energy_spin(HalfInt s_i, HalfInt s_j, const SpinCouplings& c) {
  const int two_s = c.two_s();
  check_eigenvalue(s_i, two_s);
  check_eigenvalue(s_j, two_s);
  const auto pi = powers(s_i.to_rational(), two_s);
  const auto pj = powers(s_j.to_rational(), two_s);
  const BigRational half(1, 2);

  BigRational energy;
  for (const auto& [sym, value] : c.values()) {
    if (value.is_zero()) continue;
    if (sym.kind == Symbol::Kind::Coupling) {
      energy += value * half * (pi[sym.alpha] * pj[sym.beta] + pi[sym.beta] * pj[sym.alpha]);
    } else {
      energy += BigRational(c.gamma()) * value * half * (pi[sym.alpha] + pj[sym.alpha]);
    }
  }
  return energy;
}

BigRational bond_energy_layers(std::span<const HalfInt> d_i, std::span<const HalfInt> d_j, const LayerCouplings& k) {
  if (d_i.size() != 3 || d_j.size() != 3) {
    throw Error(ErrorKind::ShapeMismatch, "three-layer energy needs two 3-digit vectors");
  }
  std::array<BigRational, 4> x;
  std::array<BigRational, 4> y;
  for (int a = 1; a <= 3; ++a) {
    for (HalfInt d : {d_i[a - 1], d_j[a - 1]}) {
      if (d.doubled() != 1 && d.doubled() != -1) {
        throw Error(ErrorKind::DigitOutOfRange, "layer digit " + d.str() + " is not +-1/2");
      }
    }
    x[a] = d_i[a - 1].to_rational();
    y[a] = d_j[a - 1].to_rational();
  }

  BigRational e;
  for (int a = 1; a <= 3; ++a) e += k.K(a, a) * x[a] * y[a];
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      e += k.K(a, b) * (x[a] * y[b] + x[b] * y[a]);
      e += k.K(b, a) * (x[a] * x[b] + y[a] * y[b]);
      e += k.R(a, b) * x[a] * y[a] * x[b] * y[b];
    }
  }
  for (int a = 1; a <= 3; ++a) {
    const int b = a == 1 ? 2 : 1;
    const int c = a == 3 ? 2 : 3;
    const BigRational aa = x[a] * y[a];
    e += k.R(a, b, c) * aa * (x[b] * y[c] + y[b] * x[c]);
    e += k.R(a, c, b) * aa * (x[b] * x[c] + y[b] * y[c]);
  }
  e += k.R() * x[1] * x[2] * x[3] * y[1] * y[2] * y[3];
  return e;
}

namespace {

// One entry per constant, in LayerCouplings::names() order. "gh<n>" stands
// for gamma * h_n. R lists J35/J37/J57 where the printed table writes the
// reversed J53/J73/J75.
constexpr std::array<std::string_view, LayerCouplings::kCount> kTabulated = {
    // K11
    "J11:1 J13:61/4 J15:3481/16 J17:186901/64 J33:3721/16 J35:212341/64 J37:11400961/256 J55:12117361/256 "
    "J57:650602381/1024 J77:34931983801/4096",
    // K12
    "J11:2 J13:29 J15:2971/8 J17:37417/8 J33:3355/8 J35:42697/8 J37:8569045/128 J55:8566741/128 "
    "J57:212837399/256 J77:21014213935/2048",
    // K13
    "J11:4 J13:46 J15:2371/4 J17:7606 J33:1891/4 J35:5776 J37:4619941/64 J55:4389541/64 J57:108081833/128 "
    "J77:10558224391/1024",
    // K22
    "J11:4 J13:55 J15:2461/4 J17:112435/16 J33:3025/4 J35:135355/16 J37:6183925/64 J55:6056521/64 "
    "J57:276702535/256 J77:12641629225/1024",
    // K23
    "J11:8 J13:86 J15:1861/2 J17:84463/8 J33:1705/2 J35:72823/8 J37:3296245/32 J55:3103321/32 "
    "J57:140402443/128 J77:6351565585/512",
    // K33
    "J11:16 J13:124 J15:1261 J17:56491/4 J33:961 J35:39091/4 J37:1751221/16 J55:1590121/16 J57:71235151/64 "
    "J77:3191233081/256",
    // K21
    "J22:21 J24:3003/8 J26:41613/8 J44:41181/8 J46:8470293/128 J66:212094831/256 gh2:2 gh4:53 gh6:6331/8",
    // K31
    "J22:42 J24:1995/4 J26:25233/4 J44:22533/4 J46:4438005/64 J66:107571711/128 gh2:4 gh4:58 gh6:3211/4",
    // K32
    "J22:84 J24:1743/2 J26:9624 J44:17871/2 J46:3150213/32 J66:69380571/64 gh2:8 gh4:92 gh6:2071/2",
    // R12
    "J22:16 J24:424 J26:6331 J44:11236 J46:335543/2 J66:40081561/16",
    // R13
    "J22:64 J24:928 J26:12844 J44:13456 J46:186238 J66:10310521/4",
    // R23
    "J22:256 J24:2944 J26:33136 J44:33856 J46:381064 J66:4289041",
    // R123
    "J22:32 J24:656 J26:9542 J44:12296 J46:176891 J66:20328841/8",
    // R213
    "J22:64 J24:1216 J26:16804 J44:19504 J46:255376 J66:13111501/4",
    // R312
    "J22:128 J24:1664 J26:21128 J44:21344 J46:267824 J66:6649981/2",
    // R132
    "J13:24 J15:420 J17:11613/2 J33:732 J35:23253/2 J37:158637 J55:365505/2 J57:79674063/32 "
    "J77:2170481313/64",
    // R231
    "J13:48 J15:840 J17:11613 J33:1320 J35:18933 J37:244005 J55:258405 J57:52190943/16 J77:1305707655/32",
    // R321
    "J13:96 J15:1680 J17:23226 J33:1488 J35:20586 J37:264738 J55:264810 J57:26507103/8 J77:656029983/16",
    // R = 9 (256 J33 + 4480 J53 + 78400 J55 + 61936 J73 + 1083880 J75 + 14984641 J77)
    "J33:2304 J35:40320 J55:705600 J37:557424 J57:9754920 J77:134861769",
};

CouplingForm parse_table_entry(std::string_view entry) {
  CouplingForm form;
  std::size_t pos = 0;
  while (pos < entry.size()) {
    auto end = entry.find(' ', pos);
    if (end == std::string_view::npos) end = entry.size();
    const std::string_view item = entry.substr(pos, end - pos);
    const auto colon = item.find(':');
    const std::string_view key = item.substr(0, colon);
    const BigRational value = BigRational::parse(item.substr(colon + 1));
    if (key.starts_with("gh")) {
      form.add(Symbol::field(key[2] - '0'), value);
    } else {
      form.add(Symbol::coupling(key[1] - '0', key[2] - '0'), value);
    }
    pos = end + 1;
  }
  return form;
}

}  // namespace

const std::array<CouplingForm, LayerCouplings::kCount>& tabulated_formulas() {
  static const std::array<CouplingForm, LayerCouplings::kCount> kForms = [] {
    std::array<CouplingForm, LayerCouplings::kCount> forms;
    for (std::size_t i = 0; i < forms.size(); ++i) forms[i] = parse_table_entry(kTabulated[i]);
    return forms;
  }();
  return kForms;
}

LayerCouplings reduce_couplings_7_2(const SpinCouplings& c) {
  if (c.two_s() != 7) throw Error(ErrorKind::InvalidArgument, "the tabulated reduction is for spin 7/2");
  LayerCouplings out;
  const auto& forms = tabulated_formulas();
  for (std::size_t i = 0; i < forms.size(); ++i) out[i] = forms[i].evaluate(c);
  return out;
}

CouplingForm DerivedReduction::coefficient(const BondPattern& pattern) const {
  auto it = terms.find(pattern);
  return it == terms.end() ? CouplingForm{} : it->second;
}

int DerivedReduction::exponent(std::uint64_t site_pattern, int digit) const {
  for (int i = 1; i < digit; ++i) site_pattern /= static_cast<std::uint64_t>(p);
  return static_cast<int>(site_pattern % static_cast<std::uint64_t>(p));
}

std::string DerivedReduction::pattern_name(const BondPattern& pattern) const {
  std::string out;
  for (const auto& [site, tag] : {std::pair{pattern.site_i, 'i'}, std::pair{pattern.site_j, 'j'}}) {
    for (int a = 1; a <= cluster_size; ++a) {
      const int e = exponent(site, a);
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += "s" + std::to_string(a) + tag;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

DerivedReduction derive_reduction(const ClusterSpec& spec, std::uint64_t limit) {
  if (spec.states() > limit) {
    throw Error(ErrorKind::LimitExceeded,
                "p^M = " + std::to_string(spec.states()) + " exceeds the derivation limit " + std::to_string(limit));
  }
  const int p = spec.p();
  const int M = spec.cluster_size();
  const std::uint64_t n = spec.states();
  const int two_s = static_cast<int>(n - 1);

  // sigma^p = sum_t reduce[t] sigma^t, from prod_v (x - v) over the sigma levels.
  RationalPolynomial minimal = RationalPolynomial::constant(BigRational(1));
  for (HalfInt v : spec.digit_values()) minimal = minimal * RationalPolynomial::linear_factor(v.to_rational());
  std::vector<BigRational> reduce(static_cast<std::size_t>(p));
  for (int t = 0; t < p; ++t) reduce[t] = -minimal.coefficient(static_cast<std::size_t>(t));

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(M));
  stride[0] = 1;
  for (int a = 1; a < M; ++a) stride[a] = stride[a - 1] * static_cast<std::uint64_t>(p);

  // site_powers[k][u] is the coefficient of monomial u in s^k.
  std::vector<std::vector<BigRational>> site_powers(static_cast<std::size_t>(two_s) + 1,
                                                    std::vector<BigRational>(n));
  site_powers[0][0] = BigRational(1);
  for (int k = 1; k <= two_s; ++k) {
    const auto& prev = site_powers[k - 1];
    auto& next = site_powers[k];
    for (std::uint64_t u = 0; u < n; ++u) {
      if (prev[u].is_zero()) continue;
      for (int a = 0; a < M; ++a) {
        const BigRational term = prev[u] * BigRational(stride[a]);
        const auto e = static_cast<int>((u / stride[a]) % static_cast<std::uint64_t>(p));
        if (e + 1 < p) {
          next[u + stride[a]] += term;
        } else {
          const std::uint64_t base = u - static_cast<std::uint64_t>(e) * stride[a];
          for (int t = 0; t < p; ++t) {
            if (!reduce[t].is_zero()) next[base + static_cast<std::uint64_t>(t) * stride[a]] += term * reduce[t];
          }
        }
      }
    }
  }

  DerivedReduction out;
  out.p = p;
  out.cluster_size = M;
  out.symbols = coupling_symbols(two_s);

  std::vector<CouplingForm> grid(n * n);
  const BigRational half(1, 2);
  for (const Symbol& sym : out.symbols) {
    if (sym.kind == Symbol::Kind::Coupling) {
      const auto& pa = site_powers[sym.alpha];
      const auto& pb = site_powers[sym.beta];
      for (std::uint64_t u = 0; u < n; ++u) {
        if (pa[u].is_zero() && pb[u].is_zero()) continue;
        for (std::uint64_t v = 0; v < n; ++v) {
          const BigRational c = half * (pa[u] * pb[v] + pb[u] * pa[v]);
          grid[u * n + v].add(sym, c);
        }
      }
    } else {
      const auto& pw = site_powers[sym.alpha];
      for (std::uint64_t u = 0; u < n; ++u) {
        if (pw[u].is_zero()) continue;
        grid[u * n].add(sym, half * pw[u]);
        grid[u].add(sym, half * pw[u]);
      }
    }
  }
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      if (!grid[u * n + v].is_zero()) out.terms.emplace(BondPattern{u, v}, std::move(grid[u * n + v]));
    }
  }
  return out;
}

LayerFormulas layer_formulas(const DerivedReduction& derived) {
  if (derived.p != 2 || derived.cluster_size != 3) {
    throw Error(ErrorKind::InvalidArgument, "layer constants are defined for p=2, M=3");
  }
  auto bit = [](int a) { return std::uint64_t{1} << (a - 1); };
  const std::uint64_t all = 7;

  // Patterns carrying each constant; all members must agree.
  std::array<std::vector<BondPattern>, LayerCouplings::kCount> members;
  auto put = [&](std::string_view name, std::vector<BondPattern> pats) {
    members[LayerCouplings::index_of(name)] = std::move(pats);
  };
  for (int a = 1; a <= 3; ++a) {
    put("K" + std::to_string(a) + std::to_string(a), {{bit(a), bit(a)}});
    for (int b = a + 1; b <= 3; ++b) {
      const std::string ab = std::to_string(a) + std::to_string(b);
      const std::string ba = std::to_string(b) + std::to_string(a);
      put("K" + ab, {{bit(a), bit(b)}, {bit(b), bit(a)}});
      put("K" + ba, {{bit(a) | bit(b), 0}, {0, bit(a) | bit(b)}});
      put("R" + ab, {{bit(a) | bit(b), bit(a) | bit(b)}});
    }
    const int b = a == 1 ? 2 : 1;
    const int c = a == 3 ? 2 : 3;
    const std::string sa = std::to_string(a), sb = std::to_string(b), sc = std::to_string(c);
    put("R" + sa + sb + sc, {{bit(a) | bit(b), bit(a) | bit(c)}, {bit(a) | bit(c), bit(a) | bit(b)}});
    put("R" + sa + sc + sb, {{all, bit(a)}, {bit(a), all}});
  }
  put("R", {{all, all}});

  LayerFormulas out;
  std::set<BondPattern> covered{{0, 0}};
  for (std::size_t i = 0; i < members.size(); ++i) {
    out.constants[i] = derived.coefficient(members[i].front());
    for (const auto& pat : members[i]) {
      covered.insert(pat);
      if (derived.coefficient(pat) != out.constants[i]) {
        throw Error(ErrorKind::Inconsistent, std::string(LayerCouplings::names()[i]) + ": pattern " +
                                                 derived.pattern_name(pat) + " disagrees with its partner");
      }
    }
  }
  for (const auto& [pat, form] : derived.terms) {
    if (!covered.contains(pat)) {
      throw Error(ErrorKind::Inconsistent, "unexpected interaction " + derived.pattern_name(pat) + " = " + form.str());
    }
  }
  out.offset = derived.constant();
  return out;
}

EquivalenceResult equivalence_check(const SpinCouplings& c, const LayerCouplings& k) {
  if (c.two_s() != 7) throw Error(ErrorKind::InvalidArgument, "equivalence_check compares spin-7/2 with three layers");
  const ClusterSpec spec(2, 3);
  EquivalenceResult result;
  result.equivalent = true;
  bool first = true;
  for (HalfInt si : spec.eigenvalues()) {
    const DigitVector di = decompose_spin(spec, si);
    for (HalfInt sj : spec.eigenvalues()) {
      const DigitVector dj = decompose_spin(spec, sj);
      const BigRational diff = bond_energy_spin(si, sj, c) - bond_energy_layers(di, dj, k);
      ++result.configurations_checked;
      if (first) {
        result.offset = diff;
        first = false;
      } else if (diff != result.offset && result.equivalent) {
        result.equivalent = false;
        result.violation = std::pair{si, sj};
      }
    }
  }
  return result;
}

}  // namespace spinmap
