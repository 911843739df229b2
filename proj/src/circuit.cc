// Copyright 2026 The hybridqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hqec/circuit.h"

#include <cmath>
#include <sstream>

#include "hqec/errors.h"

namespace hqec {

namespace {

Eigen::Matrix2cd single_qubit_matrix(GateKind kind) {
  Eigen::Matrix2cd m;
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::X:
    case GateKind::CNOT: m << 0, 1, 1, 0; break;
    case GateKind::Y:
    case GateKind::CY: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case GateKind::Z:
    case GateKind::CZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

std::optional<GateKind> kind_from_string(std::string_view s) {
  static constexpr std::pair<std::string_view, GateKind> kNames[] = {
      {"H", GateKind::H},       {"X", GateKind::X},   {"Y", GateKind::Y},   {"Z", GateKind::Z},
      {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ}, {"CY", GateKind::CY},
  };
  for (const auto& [name, kind] : kNames) {
    if (name == s) return kind;
  }
  return std::nullopt;
}

void check_gate(const Gate& g, std::size_t wires) {
  const auto in_range = [wires](std::size_t w) { return w >= 1 && w <= wires; };
  if (!in_range(g.target)) throw ArgumentError("gate " + g.str() + " targets a wire outside 1.." + std::to_string(wires));
  if (is_controlled(g.kind)) {
    if (!g.control) throw ArgumentError("gate " + std::string(to_string(g.kind)) + " needs a control wire");
    if (!in_range(*g.control)) throw ArgumentError("gate " + g.str() + " controls from a wire outside 1.." + std::to_string(wires));
    if (*g.control == g.target) throw ArgumentError("gate " + g.str() + " uses the same wire as control and target");
  } else if (g.control) {
    throw ArgumentError("gate " + std::string(to_string(g.kind)) + " takes no control wire");
  }
}

void apply_gate(const Gate& g, std::size_t n, std::vector<Complex>& amps) {
  const Eigen::Matrix2cd u = single_qubit_matrix(g.kind);
  const std::size_t tbit = std::size_t{1} << (n - g.target);
  const std::size_t cbit = g.control ? std::size_t{1} << (n - *g.control) : 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & tbit) || (i & cbit) != cbit) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | tbit];
    amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
    amps[i | tbit] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

Gate controlled_pauli(PauliLetter letter, std::size_t target, std::size_t control) {
  switch (letter) {
    case PauliLetter::X: return {GateKind::CNOT, target, control};
    case PauliLetter::Y: return {GateKind::CY, target, control};
    case PauliLetter::Z: return {GateKind::CZ, target, control};
    case PauliLetter::I: break;
  }
  throw ArgumentError("no controlled gate for the identity");
}

void check_location(std::size_t location) {
  if (location < 1 || location > 4) throw ArgumentError("error location must be in 1..4, got " + std::to_string(location));
}

// Correction gates of the published decoders, after the shared
// inverse-encoder prefix.
std::vector<Gate> published_tail(std::size_t location) {
  switch (location) {
    case 1:
      return {{GateKind::CNOT, 4, 1}, {GateKind::CNOT, 2, 1}, {GateKind::CNOT, 4, 3}};
    case 2:
      return {{GateKind::CNOT, 4, 1}, {GateKind::CNOT, 4, 3}, {GateKind::CNOT, 2, 3}, {GateKind::X, 3, std::nullopt},
              {GateKind::CZ, 2, 3}};
    case 3:
      return {{GateKind::CNOT, 2, 1}, {GateKind::CZ, 2, 1}, {GateKind::CZ, 4, 1}};
    case 4:
      return {{GateKind::CNOT, 2, 3}, {GateKind::CZ, 2, 3}};
    default:
      break;
  }
  check_location(location);
  return {};
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::CY: return "CY";
  }
  return "?";
}

bool is_controlled(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::CY; }

std::string Gate::str() const {
  std::string out = std::string(to_string(kind)) + " " + std::to_string(target);
  if (control) out += " " + std::to_string(*control);
  return out;
}

Eigen::MatrixXcd gate_matrix(GateKind kind) {
  const Eigen::Matrix2cd u = single_qubit_matrix(kind);
  if (!is_controlled(kind)) return u;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m.block<2, 2>(2, 2) = u;
  return m;
}

Circuit::Circuit(std::size_t wires, std::vector<Gate> gates) : wires_(wires) {
  if (wires == 0) throw ArgumentError("circuit needs at least one wire");
  if (wires > kMaxQubits) throw CapacityError("circuit wider than " + std::to_string(kMaxQubits) + " wires");
  for (auto& g : gates) append(g);
}

Circuit& Circuit::append(Gate gate) {
  check_gate(gate, wires_);
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.wires_ != wires_) throw DimensionError("cannot append circuits of different widths");
  for (const auto& g : other.gates_) append(g);
  return *this;
}

Circuit Circuit::inverse() const { return Circuit(wires_, std::vector<Gate>(gates_.rbegin(), gates_.rend())); }

StateVector simulate(const Circuit& c, const StateVector& s) {
  if (c.num_wires() != s.num_qubits()) {
    throw DimensionError("circuit on " + std::to_string(c.num_wires()) + " wires applied to a " +
                         std::to_string(s.num_qubits()) + "-qubit state");
  }
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (const auto& g : c.gates()) apply_gate(g, c.num_wires(), amps);
  return StateVector::from_amplitudes(c.num_wires(), std::move(amps));
}

Operator circuit_unitary(const Circuit& c) {
  const std::size_t n = c.num_wires();
  check_dense_guard(n);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector out = simulate(c, StateVector::basis(n, col));
    for (std::size_t row = 0; row < dim; ++row) u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = out[row];
  }
  return Operator(n, std::move(u));
}

std::string serialize_circuit(const Circuit& c) {
  std::string out = "wires " + std::to_string(c.num_wires()) + "\n";
  for (const auto& g : c.gates()) out += g.str() + "\n";
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const auto number = [&](const std::string& w) {
      if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos || w.size() > 6) {
        throw ParseError(line_no, "bad wire index '" + w + "'");
      }
      return static_cast<std::size_t>(std::stoul(w));
    };
    if (!circuit) {
      if (words.size() != 2 || words[0] != "wires") throw ParseError(line_no, "expected 'wires <n>' header");
      circuit.emplace(number(words[1]));
      continue;
    }
    const auto kind = kind_from_string(words[0]);
    if (!kind) throw ParseError(line_no, "unknown gate '" + words[0] + "'");
    const std::size_t expected = is_controlled(*kind) ? 3 : 2;
    if (words.size() != expected) throw ParseError(line_no, "gate " + words[0] + " takes " + std::to_string(expected - 1) + " wire(s)");
    Gate g{*kind, number(words[1]), std::nullopt};
    if (expected == 3) g.control = number(words[2]);
    try {
      circuit->append(g);
    } catch (const ArgumentError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'wires <n>' header");
  return *circuit;
}

std::optional<PauliString> identify_pauli(const Operator& u, double tolerance) {
  const std::size_t n = u.num_qubits();
  const std::size_t dim = u.dimension();
  // Q = w X^x Z^z sends |0> to w|x>.
  std::size_t x = dim;
  for (std::size_t r = 0; r < dim; ++r) {
    if (std::abs(u(r, 0)) > 0.5) {
      x = r;
      break;
    }
  }
  if (x == dim) return std::nullopt;
  const Complex w = u(x, 0);
  std::size_t z = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    if (std::abs(u(bit ^ x, bit) + w) < 0.5) z |= bit;
  }
  std::vector<PauliLetter> letters(n);
  unsigned y_count = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const bool has_x = x & bit;
    const bool has_z = z & bit;
    letters[q] = has_x ? (has_z ? PauliLetter::Y : PauliLetter::X) : (has_z ? PauliLetter::Z : PauliLetter::I);
    y_count += has_x && has_z;
  }
  // w = phase * i^{#Y}; pick the unit closest to w / i^{#Y}.
  const PauliString unit(letters, 0);
  const Complex scaled = w / unit.with_phase(y_count).phase();
  unsigned phase = 0;
  double best = 10;
  for (unsigned k = 0; k < 4; ++k) {
    const double d = std::abs(scaled - unit.with_phase(k).phase());
    if (d < best) {
      best = d;
      phase = k;
    }
  }
  PauliString candidate(std::move(letters), phase);
  if (max_abs_diff(pauli_matrix(candidate), u) > tolerance) return std::nullopt;
  return candidate;
}

Circuit encode_circuit() {
  return Circuit(4, {
                        {GateKind::CNOT, 1, 2},
                        {GateKind::CNOT, 3, 2},
                        {GateKind::H, 2, std::nullopt},
                        {GateKind::CNOT, 3, 4},
                        {GateKind::CNOT, 1, 2},
                        {GateKind::CNOT, 2, 3},
                        {GateKind::CNOT, 3, 2},
                        {GateKind::CNOT, 4, 3},
                    });
}

Circuit decode_circuit(std::size_t location) {
  check_location(location);
  Circuit c = encode_circuit().inverse();
  for (const auto& g : published_tail(location)) c.append(g);
  return c;
}

Circuit synthesized_decode_circuit(std::size_t location) {
  check_location(location);
  const Circuit encoder = encode_circuit();
  const Operator u = circuit_unitary(encoder);
  const std::size_t n = encoder.num_wires();

  // Pull X and Z at `location` back through the encoder. Their X parts on
  // the ancilla wires form the syndrome; their parts on the data wires are
  // the residual to undo.
  struct Pulled {
    unsigned syndrome;  // bit 0: wire 1, bit 1: wire 3
    PauliString residual;
  };
  const auto pull = [&](PauliLetter letter) {
    const auto q = identify_pauli(u.adjoint() * pauli_matrix(PauliString::single(n, location, letter)) * u);
    if (!q) throw std::logic_error("encoder is not Clifford");
    unsigned syndrome = 0;
    for (unsigned a = 0; a < 2; ++a) {
      const auto l = q->at(kAncillaWires[a]);
      if (l == PauliLetter::X || l == PauliLetter::Y) syndrome |= 1u << a;
    }
    std::vector<PauliLetter> data(n, PauliLetter::I);
    data[kQuantumInputWire - 1] = q->at(kQuantumInputWire);
    data[kClassicalInputWire - 1] = q->at(kClassicalInputWire);
    return Pulled{syndrome, PauliString(std::move(data))};
  };
  const Pulled px = pull(PauliLetter::X);
  const Pulled pz = pull(PauliLetter::Z);
  if (px.syndrome == 0 || pz.syndrome == 0 || px.syndrome == pz.syndrome) {
    throw std::logic_error("errors at location " + std::to_string(location) + " have dependent syndromes");
  }

  Circuit c = encoder.inverse();
  // Each ancilla bit e_a is a combination of the two syndromes; its
  // correction is the matching product of residuals.
  for (unsigned a = 0; a < 2; ++a) {
    const unsigned target = 1u << a;
    PauliString correction(n);
    bool found = false;
    for (unsigned alpha = 0; alpha < 2 && !found; ++alpha) {
      for (unsigned beta = 0; beta < 2 && !found; ++beta) {
        if (((alpha ? px.syndrome : 0u) ^ (beta ? pz.syndrome : 0u)) != target) continue;
        if (alpha) correction = pauli_multiply(correction, px.residual);
        if (beta) correction = pauli_multiply(correction, pz.residual);
        found = true;
      }
    }
    for (std::size_t wire : {kQuantumInputWire, kClassicalInputWire}) {
      const auto letter = correction.at(wire);
      if (letter != PauliLetter::I) c.append(controlled_pauli(letter, wire, kAncillaWires[a]));
    }
  }
  return c;
}

std::string_view to_string(DecoderVariant variant) {
  return variant == DecoderVariant::kPublished ? "published" : "synthesized";
}

Circuit decoder(std::size_t location, DecoderVariant variant) {
  return variant == DecoderVariant::kPublished ? decode_circuit(location) : synthesized_decode_circuit(location);
}

StateVector encoder_input(const StateVector& q, int c) {
  if (q.num_qubits() != 1) throw DimensionError("quantum input must be a single qubit");
  if (c != 0 && c != 1) throw ArgumentError("classical input must be 0 or 1");
  const StateVector zero = StateVector::basis(1, 0);
  return zero.tensor(q).tensor(zero).tensor(StateVector::basis(1, static_cast<std::size_t>(c)));
}

std::optional<OutputWires> discover_output_wires(const Circuit& decoder) {
  const Circuit encoder = encode_circuit();
  if (decoder.num_wires() != encoder.num_wires()) throw DimensionError("decoder must act on the encoder's wires");
  struct Case {
    StateVector q;
    int c;
    StateVector out;
  };
  std::vector<Case> cases;
  for (const char* name : {"0", "1", "+", "+i"}) {
    for (int c : {0, 1}) {
      const StateVector q = StateVector::single_qubit(name);
      cases.push_back({q, c, simulate(decoder, simulate(encoder, encoder_input(q, c)))});
    }
  }
  for (std::size_t qw = 1; qw <= decoder.num_wires(); ++qw) {
    for (std::size_t cw = 1; cw <= decoder.num_wires(); ++cw) {
      if (qw == cw) continue;
      bool all = true;
      for (const auto& k : cases) {
        Eigen::Vector2cd v(k.q[0], k.q[1]);
        const double fidelity = (v.adjoint() * k.out.reduced_density(qw) * v)(0, 0).real();
        if (fidelity < 1 - kUserTolerance || k.out.probability(cw, k.c) < 1 - kUserTolerance) {
          all = false;
          break;
        }
      }
      if (all) return OutputWires{qw, cw};
    }
  }
  return std::nullopt;
}

bool RoundTripReport::passed() const { return fidelity_q >= 1 - kUserTolerance && classical_ok; }

RoundTripReport roundtrip(std::string_view q_name, int c, const PauliString& error, std::size_t location,
                          DecoderVariant variant) {
  check_location(location);
  if (error.num_qubits() != 4) throw DimensionError("error must act on the 4 code qubits");
  if (error.weight() > 1) throw ArgumentError("round trip takes errors of weight <= 1, got " + error.sparse_str());
  if (error.weight() == 1 && error.support().front() != location) {
    throw ArgumentError("error " + error.sparse_str() + " does not act on location " + std::to_string(location));
  }
  const StateVector q = StateVector::single_qubit(q_name);
  const Circuit dec = decoder(location, variant);

  RoundTripReport report{error, location, std::string(q_name), c};
  if (auto wires = discover_output_wires(dec)) {
    report.output_wires = *wires;
    report.wires_discovered = true;
  }
  const StateVector encoded = simulate(encode_circuit(), encoder_input(q, c));
  const StateVector out = simulate(dec, apply_pauli(error, encoded));
  const Eigen::Vector2cd v(q[0], q[1]);
  report.fidelity_q = (v.adjoint() * out.reduced_density(report.output_wires.quantum) * v)(0, 0).real();
  report.classical_probability = out.probability(report.output_wires.classical, c);
  report.classical_ok = report.classical_probability >= 1 - kUserTolerance;
  return report;
}

std::vector<RoundTripReport> roundtrip_sweep(DecoderVariant variant) {
  std::vector<RoundTripReport> out;
  for (std::size_t loc = 1; loc <= 4; ++loc) {
    for (auto letter : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
      for (const char* q : {"0", "1", "+"}) {
        for (int c : {0, 1}) out.push_back(roundtrip(q, c, PauliString::single(4, loc, letter), loc, variant));
      }
    }
  }
  return out;
}

std::string decoder_discrepancy_report() {
  std::ostringstream os;
  const std::size_t prefix = encode_circuit().gates().size();
  const auto sweep = roundtrip_sweep(DecoderVariant::kPublished);
  for (std::size_t loc = 1; loc <= 4; ++loc) {
    const Circuit published = decode_circuit(loc);
    const Circuit synthesized = synthesized_decode_circuit(loc);
    os << "location " << loc << "\n";
    os << "  shared prefix: inverse encoder, " << prefix << " gates\n";
    os << "  published corrections:  ";
    for (std::size_t i = prefix; i < published.gates().size(); ++i) os << " [" << published.gates()[i].str() << "]";
    os << "\n  synthesized corrections:";
    for (std::size_t i = prefix; i < synthesized.gates().size(); ++i) os << " [" << synthesized.gates()[i].str() << "]";
    os << "\n";
    const auto wires = discover_output_wires(published);
    if (wires) {
      os << "  published output wires: quantum " << wires->quantum << ", classical " << wires->classical << "\n";
    } else {
      os << "  published decoder fails the no-error round trip on every wire pair\n";
    }
    std::size_t failures = 0;
    for (const auto& r : sweep) {
      if (r.location != loc || r.passed()) continue;
      ++failures;
      os << "  FAIL " << r.error.sparse_str() << " q=" << r.input_q << " c=" << r.input_c << " fidelity=" << format_real(r.fidelity_q)
         << " p_classical=" << format_real(r.classical_probability) << "\n";
    }
    os << "  published failures: " << failures << " of 18\n";
  }
  return os.str();
}

}  // namespace hqec
