#include "spinmap/couplings.hpp"

#include "spinmap/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace spinmap {

std::string Symbol::name() const {
  if (kind == Kind::Field) return "h" + std::to_string(alpha);
  if (alpha <= 9 && beta <= 9) return "J" + std::to_string(alpha) + std::to_string(beta);
  return "J" + std::to_string(alpha) + "," + std::to_string(beta);
}

std::string Symbol::term_name() const { return kind == Kind::Field ? "gamma*" + name() : name(); }

std::vector<Symbol> coupling_symbols(int two_s) {
  std::vector<Symbol> out;
  for (int a = 1; a <= two_s; ++a) {
    for (int b = a; b <= two_s; ++b) {
      if ((a + b) % 2 == 0) out.push_back(Symbol::coupling(a, b));
    }
  }
  for (int power = 2; power <= two_s; power += 2) out.push_back(Symbol::field(power));
  return out;
}

SpinCouplings::SpinCouplings(int two_s, std::int64_t gamma) : two_s_(two_s), gamma_(1) {
  if (two_s < 1) throw Error(ErrorKind::InvalidArgument, "2S must be >= 1");
  set_gamma(gamma);
  for (const Symbol& sym : coupling_symbols(two_s)) values_.emplace(sym, BigRational(0));
}

void SpinCouplings::set_gamma(std::int64_t gamma) {
  if (gamma < 1) throw Error(ErrorKind::InvalidArgument, "gamma must be a positive integer, got " + std::to_string(gamma));
  gamma_ = gamma;
}

const BigRational& SpinCouplings::get(const Symbol& sym) const {
  auto it = values_.find(sym);
  if (it == values_.end()) {
    throw Error(ErrorKind::InvalidArgument, sym.name() + " is not a coupling of the spin-" + std::to_string(two_s_) + "/2 family");
  }
  return it->second;
}

void SpinCouplings::set(const Symbol& sym, BigRational value) {
  auto it = values_.find(sym);
  if (it == values_.end()) {
    throw Error(ErrorKind::InvalidArgument, sym.name() + " is not a coupling of the spin-" + std::to_string(two_s_) + "/2 family");
  }
  it->second = std::move(value);
}

BigRational SpinCouplings::term_value(const Symbol& sym) const {
  const BigRational& v = get(sym);
  return sym.kind == Symbol::Kind::Field ? v * BigRational(gamma_) : v;
}

std::string SpinCouplings::to_text() const {
  std::ostringstream os;
  os << "gamma = " << gamma_ << '\n';
  for (const Symbol& sym : coupling_symbols(two_s_)) os << sym.name() << " = " << get(sym) << '\n';
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_small_int(std::string_view s, const std::string& context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::Parse, "bad index in key '" + context + "'");
  }
  return value;
}

Symbol parse_key(std::string_view key, int two_s) {
  const std::string context(key);
  if (key.size() >= 2 && key.front() == 'h') {
    const int power = parse_small_int(key.substr(1), context);
    return Symbol::field(power);
  }
  if (key.size() >= 3 && key.front() == 'J') {
    std::string_view rest = key.substr(1);
    const auto comma = rest.find(',');
    if (comma != std::string_view::npos) {
      return Symbol::coupling(parse_small_int(rest.substr(0, comma), context),
                              parse_small_int(rest.substr(comma + 1), context));
    }
    if (rest.size() == 2 && two_s <= 9) {
      return Symbol::coupling(parse_small_int(rest.substr(0, 1), context), parse_small_int(rest.substr(1, 1), context));
    }
  }
  throw Error(ErrorKind::Parse, "unknown coupling key '" + context + "'");
}

}  // namespace

SpinCouplings SpinCouplings::parse(std::string_view text, int two_s) {
  SpinCouplings out(two_s);
  std::set<std::string> seen;
  bool have_gamma = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "gamma") {
      if (have_gamma) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": gamma given twice");
      const BigRational g = BigRational::parse(value);
      if (!g.is_integer() || g.sign() <= 0) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": gamma must be a positive integer");
      }
      out.set_gamma(std::stoll(g.str()));
      have_gamma = true;
      continue;
    }

    const Symbol sym = parse_key(key, two_s);
    if (!out.has(sym)) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown coupling key '" + std::string(key) + "'");
    }
    if (!seen.insert(sym.name()).second) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + sym.name() + " given twice");
    }
    out.set(sym, BigRational::parse(value));
  }
  if (!have_gamma) throw Error(ErrorKind::Parse, "coupling file does not set gamma");
  return out;
}

void CouplingForm::add(const Symbol& sym, const BigRational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(sym, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BigRational CouplingForm::coefficient(const Symbol& sym) const {
  auto it = terms_.find(sym);
  return it == terms_.end() ? BigRational(0) : it->second;
}

BigRational CouplingForm::evaluate(const SpinCouplings& couplings) const {
  BigRational out;
  for (const auto& [sym, c] : terms_) out += c * couplings.term_value(sym);
  return out;
}

CouplingForm& CouplingForm::operator+=(const CouplingForm& other) {
  for (const auto& [sym, c] : other.terms_) add(sym, c);
  return *this;
}

CouplingForm& CouplingForm::operator-=(const CouplingForm& other) {
  for (const auto& [sym, c] : other.terms_) add(sym, -c);
  return *this;
}

CouplingForm CouplingForm::scaled(const BigRational& factor) const {
  CouplingForm out;
  for (const auto& [sym, c] : terms_) out.add(sym, c * factor);
  return out;
}

std::string CouplingForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [sym, c] : terms_) {
    BigRational magnitude = c;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        magnitude = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      magnitude = c.abs();
    }
    if (magnitude != BigRational(1)) out += magnitude.str() + "*";
    out += sym.term_name();
    first = false;
  }
  return out;
}

const std::array<std::string_view, LayerCouplings::kCount>& LayerCouplings::names() {
  static const std::array<std::string_view, kCount> kNames = {
      "K11", "K12", "K13", "K22", "K23", "K33", "K21", "K31", "K32", "R12",
      "R13", "R23", "R123", "R213", "R312", "R132", "R231", "R321", "R"};
  return kNames;
}

std::size_t LayerCouplings::index_of(std::string_view name) {
  const auto& all = names();
  const auto it = std::find(all.begin(), all.end(), name);
  if (it == all.end()) throw Error(ErrorKind::InvalidArgument, "unknown layer constant '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - all.begin());
}

const BigRational& LayerCouplings::K(int a, int b) const {
  if (a < 1 || a > 3 || b < 1 || b > 3) throw Error(ErrorKind::IndexOutOfRange, "layer index outside 1..3");
  return at("K" + std::to_string(a) + std::to_string(b));
}

const BigRational& LayerCouplings::R(int a, int b) const {
  if (a < 1 || b > 3 || a >= b) throw Error(ErrorKind::IndexOutOfRange, "R_{a,b} needs 1 <= a < b <= 3");
  return at("R" + std::to_string(a) + std::to_string(b));
}

const BigRational& LayerCouplings::R(int a, int b, int c) const {
  if (a == b || b == c || a == c || std::min({a, b, c}) < 1 || std::max({a, b, c}) > 3) {
    throw Error(ErrorKind::IndexOutOfRange, "R_{a,b,c} needs a permutation of 1,2,3");
  }
  return at("R" + std::to_string(a) + std::to_string(b) + std::to_string(c));
}

}  // namespace spinmap
