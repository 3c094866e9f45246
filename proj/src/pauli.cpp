// Copyright 2026 The hqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqc/pauli.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <sstream>

#include "hqc/error.hpp"

namespace hqc {

namespace {

constexpr std::size_t kMaxQubits = 8;

void require_same_length(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw Error(ErrorCode::LengthMismatch, "Pauli strings on " + std::to_string(a.n_qubits()) + " and " +
                                               std::to_string(b.n_qubits()) + " qubits");
}

// Letters encoded I=0, X=1, Y=2, Z=3 multiply by XOR; the phase is +i for
// cyclic order (XY, YZ, ZX) and -i for anticyclic order.
std::pair<PauliLetter, int> multiply_letters(PauliLetter a, PauliLetter b) {
  const auto ia = static_cast<int>(a);
  const auto ib = static_cast<int>(b);
  const auto product = static_cast<PauliLetter>(ia ^ ib);
  if (ia == 0 || ib == 0 || ia == ib) return {product, 0};
  return {product, ((ib - ia + 3) % 3) == 1 ? 1 : 3};
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

char to_char(PauliLetter l) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(l)];
}

cplx Phase::value() const {
  static const cplx kValues[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kValues[k_];
}

PauliString::PauliString(std::vector<PauliLetter> letters, Phase phase)
    : letters_(std::move(letters)), phase_(phase) {
  if (letters_.empty()) throw Error(ErrorCode::InvalidArgument, "Pauli string needs at least one qubit");
}

PauliString PauliString::identity(std::size_t n) { return uniform(n, PauliLetter::I); }

PauliString PauliString::uniform(std::size_t n, PauliLetter letter) {
  return PauliString(std::vector<PauliLetter>(n, letter));
}

PauliString PauliString::on_sites(std::size_t n,
                                  std::initializer_list<std::pair<std::size_t, PauliLetter>> sites,
                                  Phase phase) {
  std::vector<PauliLetter> letters(n, PauliLetter::I);
  for (const auto& [site, letter] : sites) {
    if (site < 1 || site > n) throw Error(ErrorCode::IndexOutOfRange, "site " + std::to_string(site));
    letters[site - 1] = letter;
  }
  return PauliString(std::move(letters), phase);
}

PauliString PauliString::parse(std::string_view text) {
  int exponent = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') exponent = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    exponent += 1;
    ++pos;
  }
  std::vector<PauliLetter> letters;
  for (; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case 'I': letters.push_back(PauliLetter::I); break;
      case 'X': letters.push_back(PauliLetter::X); break;
      case 'Y': letters.push_back(PauliLetter::Y); break;
      case 'Z': letters.push_back(PauliLetter::Z); break;
      default: throw Error(ErrorCode::ParseError, "bad Pauli string '" + std::string(text) + "'");
    }
  }
  if (letters.empty()) throw Error(ErrorCode::ParseError, "empty Pauli string");
  return PauliString(std::move(letters), Phase(exponent));
}

PauliString PauliString::with_phase(Phase p) const {
  PauliString out = *this;
  out.phase_ = p;
  return out;
}

bool PauliString::is_identity_up_to_phase() const {
  for (auto l : letters_)
    if (l != PauliLetter::I) return false;
  return true;
}

PauliString PauliString::lifted(std::size_t n_total) const {
  if (n_total < letters_.size()) throw Error(ErrorCode::LengthMismatch, "cannot lift to fewer qubits");
  std::vector<PauliLetter> letters = letters_;
  letters.resize(n_total, PauliLetter::I);
  return PauliString(std::move(letters), phase_);
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_.exponent()];
  for (auto l : letters_) s.push_back(to_char(l));
  return s;
}

PauliString pauli_product(const PauliString& a, const PauliString& b) {
  require_same_length(a, b);
  std::vector<PauliLetter> letters(a.n_qubits());
  int exponent = a.phase().exponent() + b.phase().exponent();
  for (std::size_t q = 0; q < letters.size(); ++q) {
    const auto [letter, k] = multiply_letters(a.letters()[q], b.letters()[q]);
    letters[q] = letter;
    exponent += k;
  }
  return PauliString(std::move(letters), Phase(exponent));
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_length(a, b);
  int anticommuting = 0;
  for (std::size_t q = 0; q < a.n_qubits(); ++q) {
    const auto la = a.letters()[q];
    const auto lb = b.letters()[q];
    if (la != PauliLetter::I && lb != PauliLetter::I && la != lb) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

ComplexMatrix pauli_to_matrix(const PauliString& p) {
  const std::size_t n = p.n_qubits();
  if (n > kMaxQubits)
    throw Error(ErrorCode::DimensionTooLarge, std::to_string(n) + " qubits exceeds the 8-qubit limit");
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  int y_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    switch (p.letters()[q]) {
      case PauliLetter::I: break;
      case PauliLetter::X: xmask |= bit; break;
      case PauliLetter::Y: xmask |= bit; zmask |= bit; ++y_count; break;
      case PauliLetter::Z: zmask |= bit; break;
    }
  }
  // sigma_y = i X Z column-wise: Y|b> = i (-1)^b |1-b>.
  const cplx base = (p.phase() * Phase(y_count)).value();
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const bool negative = (std::popcount(col & zmask) & 1) != 0;
    m(col ^ xmask, col) = negative ? -base : base;
  }
  return m;
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<Term> terms) : n_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.string.n_qubits() != n_) throw Error(ErrorCode::LengthMismatch, "term length differs from sum");
}

PauliSum PauliSum::parse(std::string_view text, std::size_t n_qubits) {
  PauliSum sum(n_qubits);
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "+" || token == "0") continue;
    const auto star = token.find('*');
    if (star == std::string::npos) throw Error(ErrorCode::ParseError, "term '" + token + "' lacks '*'");
    double coefficient = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + star;
    if (*first == '+') ++first;
    auto res = std::from_chars(first, last, coefficient);
    if (res.ec != std::errc{} || res.ptr != last)
      throw Error(ErrorCode::ParseError, "bad coefficient in '" + token + "'");
    const auto s = PauliString::parse(std::string_view(token).substr(star + 1));
    if (s.n_qubits() != n_qubits) throw Error(ErrorCode::LengthMismatch, "term '" + token + "'");
    sum.add(coefficient, s);
  }
  return sum;
}

PauliSum& PauliSum::add(double coefficient, const PauliString& s) {
  if (s.n_qubits() != n_) throw Error(ErrorCode::LengthMismatch, "term length differs from sum");
  terms_.push_back({coefficient, s});
  return *this;
}

PauliSum PauliSum::simplified() const {
  std::map<std::string, Term> merged;
  for (const auto& t : terms_) {
    double c = t.coefficient;
    PauliString s = t.string;
    if (s.phase() == Phase::minus_one() || s.phase() == Phase::minus_i()) {
      c = -c;
      s = s.with_phase(s.phase() * Phase::minus_one());
    }
    auto [it, inserted] = merged.try_emplace(s.to_string(), Term{0.0, s});
    it->second.coefficient += c;
  }
  PauliSum out(n_);
  for (auto& [key, t] : merged)
    if (t.coefficient != 0.0) out.terms_.push_back(std::move(t));
  return out;
}

bool PauliSum::is_hermitian() const {
  for (const auto& t : simplified().terms_)
    if (!t.string.phase().is_real()) return false;
  return true;
}

ComplexMatrix PauliSum::to_matrix() const {
  if (n_ > kMaxQubits)
    throw Error(ErrorCode::DimensionTooLarge, std::to_string(n_) + " qubits exceeds the 8-qubit limit");
  ComplexMatrix m(std::size_t{1} << n_);
  for (const auto& t : terms_) m += pauli_to_matrix(t.string) * cplx(t.coefficient);
  return m;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    s += format_double(terms_[i].coefficient);
    s += '*';
    s += terms_[i].string.to_string();
  }
  return s;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::LengthMismatch, "adding sums on different qubit counts");
  PauliSum out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

PauliSum operator*(double s, const PauliSum& a) {
  PauliSum out = a;
  for (auto& t : out.terms_) t.coefficient *= s;
  return out;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) throw Error(ErrorCode::LengthMismatch, "multiplying sums");
  PauliSum out(a.n_qubits());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) out.add(ta.coefficient * tb.coefficient, ta.string * tb.string);
  return out.simplified();
}

DecouplingGroup DecouplingGroup::lifted(std::size_t n_total) const {
  DecouplingGroup g{n_total, {}};
  for (std::size_t i = 0; i < 4; ++i) g.elements[i] = elements[i].lifted(n_total);
  return g;
}

DecouplingGroup build_decoupling_group(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "decoupling group needs n >= 2");
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "decoupling group needs even n, got " + std::to_string(n));
  if (n > kMaxQubits) throw Error(ErrorCode::DimensionTooLarge, "n > 8");
  const auto x = PauliString::uniform(n, PauliLetter::X);
  const auto z = PauliString::uniform(n, PauliLetter::Z);
  DecouplingGroup g{n, {PauliString::identity(n), x, z * x, z}};

  // Projective closure and commutativity.
  for (const auto& a : g.elements) {
    for (const auto& b : g.elements) {
      const auto ab = a * b;
      bool found = false;
      for (const auto& c : g.elements) found = found || ab.letters() == c.letters();
      if (!found || !commutes(a, b))
        throw Error(ErrorCode::InvalidArgument, "decoupling group failed projective closure");
    }
  }
  return g;
}

PauliSum group_average(const PauliSum& h, const DecouplingGroup& g) {
  if (h.n_qubits() != g.n_qubits) throw Error(ErrorCode::LengthMismatch, "group_average");
  const double weight = 1.0 / static_cast<double>(g.elements.size());
  PauliSum out(h.n_qubits());
  for (const auto& t : h.terms())
    for (const auto& e : g.elements) out.add(t.coefficient * weight, e.adjoint() * t.string * e);
  return out.simplified();
}

bool commutes_with_group(const PauliString& p, const DecouplingGroup& g) {
  for (const auto& e : g.elements)
    if (!commutes(p, e)) return false;
  return true;
}

std::vector<PauliString> commutant_generators(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddN, "commutant generators need even n");
  if (n < 4) throw Error(ErrorCode::NTooSmall, "commutant generators need n >= 4");
  if (n > kMaxQubits) throw Error(ErrorCode::DimensionTooLarge, "n > 8");
  std::vector<PauliString> gens;
  for (std::size_t j = 1; j <= n - 2; ++j)
    gens.push_back(PauliString::on_sites(n, {{1, PauliLetter::X}, {j + 1, PauliLetter::X}}));
  for (std::size_t j = 1; j <= n - 2; ++j)
    gens.push_back(PauliString::on_sites(n, {{j + 1, PauliLetter::Z}, {n, PauliLetter::Z}}));
  return gens;
}

}  // namespace hqc
