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

#include "hqec/cli.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "hqec/bounds.h"
#include "hqec/circuit.h"
#include "hqec/code.h"
#include "hqec/errors.h"
#include "hqec/search.h"
#include "hqec/verifier.h"

namespace hqec {

namespace {

constexpr const char* kPaperErrors = "detect:single,Z1Z2,Z3Z4";

std::string bool_str(bool b) { return b ? "true" : "false"; }

HybridCode load_code(const std::string& which) {
  if (which == "paper") return builtin_paper_code();
  if (which == "simple") return builtin_simple_code();
  return load_code_file(which);
}

// Emits the RESULT line and returns the exit code for `ok`.
int finish(std::ostream& out, ResultLine result) {
  out << result.str() << "\n";
  return result.ok ? kExitOk : kExitFailed;
}

BigInt parse_bigint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ArgumentError("-M expects a nonnegative integer, got '" + s + "'");
  }
  return BigInt(s);
}

std::string to_str(const BigInt& v) { return v.str(); }

struct Options {
  std::string code = "paper";
  std::string errors;
  std::string form = "vector";
  std::string bound_kind;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string m = "1";
  std::size_t t = 0;
  std::size_t big_k = 1;
  std::string sim_mode;
  std::string q = "0";
  int c = 0;
  std::string error = "I";
  std::optional<std::size_t> loc;
  std::string variant = "synthesized";
  std::size_t max_terms = 1;
  std::size_t limit = 100;
  std::string out_dir;
  unsigned threads = 1;
  bool no_disjoint = false;
  bool phases = false;
  double max_space = 1e12;
  std::string circuit_name;
  std::string out_file;
};

DecoderVariant parse_variant(const std::string& v) {
  return v == "published" ? DecoderVariant::kPublished : DecoderVariant::kSynthesized;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const HybridCode code = load_code(o.code);
  const ErrorSetSpec spec = parse_error_spec(o.errors.empty() ? kPaperErrors : o.errors, code.num_qubits());
  out << "code " << parameters(code).str() << " n=" << code.num_qubits() << " K=" << code.block_size()
      << " M=" << code.num_blocks() << "\n";
  out << "mode " << to_string(spec.mode) << ", " << spec.paulis.size() << " errors\n";

  std::optional<Verdict> vec, op;
  if (o.form != "operator") vec = check_vector_form(code, spec);
  if (o.form != "vector") op = check_operator_form(code, spec);

  const auto show = [&](const char* name, const Verdict& v) {
    out << name << ": " << (v.ok ? "pass" : "FAIL") << " (" << v.pairs.size() << " pairs, " << v.violations.size()
        << " violations, max residual " << format_result_double(v.max_residual) << ")\n";
    const std::size_t shown = std::min<std::size_t>(v.violations.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) out << "  " << v.violations[i].describe() << "\n";
    if (shown < v.violations.size()) out << "  ... " << v.violations.size() - shown << " more\n";
  };
  if (vec) show("vector form", *vec);
  if (op) show("operator form", *op);

  ResultLine r;
  const Verdict& primary = vec ? *vec : *op;
  r.ok = primary.ok;
  r.fields.push_back({"form", o.form});
  r.fields.push_back({"mode", std::string(to_string(spec.mode))});
  r.fields.push_back({"pairs", std::to_string(primary.pairs.size())});
  r.fields.push_back({"violations", std::to_string(primary.violations.size())});
  r.fields.push_back({"max_residual", format_result_double(primary.max_residual)});
  if (vec && op) {
    bool agree = vec->ok == op->ok;
    double alpha_diff = 0;
    if (agree && vec->ok) {
      for (std::size_t p = 0; p < vec->alphas.size(); ++p) {
        for (std::size_t b = 0; b < vec->alphas[p].size(); ++b) {
          alpha_diff = std::max(alpha_diff, std::abs(vec->alphas[p][b] - op->alphas[p][b]));
        }
      }
      agree = alpha_diff <= kUserTolerance;
    }
    out << "forms " << (agree ? "agree" : "DISAGREE") << " (max alpha difference " << format_result_double(alpha_diff)
        << ")\n";
    r.ok = agree && vec->ok && op->ok;
    r.fields.push_back({"agree", bool_str(agree)});
    r.fields.push_back({"alpha_diff", format_result_double(alpha_diff)});
  }
  return finish(out, r);
}

int cmd_bound(const Options& o, std::ostream& out) {
  const BoundQuery q{o.n, o.k, parse_bigint(o.m), o.t};
  ResultLine r;
  r.fields.push_back({"bound", o.bound_kind});
  if (o.bound_kind == "max-classical") {
    const BigInt m = max_classical(q.n, q.k, q.t);
    out << "largest M with M * ball(" << q.n << "," << q.t << ") * 2^" << q.k << " <= 2^" << q.n << ": " << m << "\n";
    r.ok = true;
    r.fields.push_back({"max_m", to_str(m)});
    r.fields.push_back({"ball", to_str(error_ball_size(q.n, q.t))});
    return finish(out, r);
  }
  const BoundReport b = o.bound_kind == "quantum" ? quantum_hamming(q) : hybrid_hamming(q);
  out << b.lhs << (b.holds ? " <= " : " > ") << b.rhs << "\n";
  if (o.bound_kind == "hybrid") {
    if (auto eq = equivalent_quantum_bound(q)) {
      out << "same left side as the quantum bound at k=" << q.k + static_cast<std::size_t>(boost::multiprecision::msb(q.m))
          << "\n";
    }
  }
  r.ok = b.holds;
  r.fields.push_back({"lhs", to_str(b.lhs)});
  r.fields.push_back({"rhs", to_str(b.rhs)});
  r.fields.push_back({"slack", to_str(b.slack)});
  return finish(out, r);
}

int cmd_distance(const Options& o, std::ostream& out) {
  const HybridCode code = load_code(o.code);
  const DistanceResult d = find_distance(code);
  out << "distance " << d.distance;
  if (d.witness) out << ", first undetected error " << d.witness->sparse_str();
  out << "\n";
  ResultLine r;
  r.ok = true;
  r.fields.push_back({"distance", std::to_string(d.distance)});
  r.fields.push_back({"params", parameters(code, d.distance).str()});
  if (d.witness) r.fields.push_back({"witness", d.witness->sparse_str()});
  return finish(out, r);
}

std::string ranks_str(const std::vector<std::size_t>& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
  return s;
}

int cmd_degeneracy(const Options& o, std::ostream& out, std::ostream& err) {
  const HybridCode code = load_code(o.code);
  const ErrorSetSpec spec = parse_error_spec(o.errors.empty() ? kPaperErrors : o.errors, code.num_qubits());
  ResultLine r;
  try {
    if (spec.mode == CheckMode::kCorrect) {
      const DegeneracyReport d = degeneracy(code, spec);
      out << "alpha matrix " << d.error_count << "x" << d.error_count << ", rank per block " << ranks_str(d.per_block_rank)
          << "\n";
      r.ok = true;
      r.fields.push_back({"degenerate", bool_str(d.degenerate)});
      r.fields.push_back({"method", "correct"});
      r.fields.push_back({"size", std::to_string(d.error_count)});
      r.fields.push_back({"ranks", ranks_str(d.per_block_rank)});
    } else {
      // A detect set is not correctable as a whole; analyze each known
      // error location separately.
      const LocatedDegeneracy d = known_location_degeneracy(code, spec);
      std::string ranks;
      for (const auto& [loc, rep] : d.per_location) {
        out << "location " << loc << ": alpha matrix " << rep.error_count << "x" << rep.error_count
            << ", rank per block " << ranks_str(rep.per_block_rank) << (rep.degenerate ? " (degenerate)" : "") << "\n";
        if (!ranks.empty()) ranks += ";";
        ranks += std::to_string(loc) + ":" + ranks_str(rep.per_block_rank);
      }
      r.ok = true;
      r.fields.push_back({"degenerate", bool_str(d.degenerate)});
      r.fields.push_back({"method", "known-location"});
      r.fields.push_back({"ranks", ranks});
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    r.ok = false;
    r.fields.push_back({"reason", "not-correctable"});
  }
  return finish(out, r);
}

StateVector logical_state(const HybridCode& code, const StateVector& q, int c) {
  std::vector<Complex> amps(code.codeword(0, 0).dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    amps[i] = q[0] * code.codeword(c, 0)[i] + q[1] * code.codeword(c, 1)[i];
  }
  return StateVector::normalized(code.num_qubits(), std::move(amps));
}

int cmd_simulate(const Options& o, std::ostream& out) {
  if (o.c != 0 && o.c != 1) throw ArgumentError("--c must be 0 or 1");
  const DecoderVariant variant = parse_variant(o.variant);
  ResultLine r;
  r.fields.push_back({"mode", o.sim_mode});
  if (o.sim_mode == "encode") {
    const HybridCode code = builtin_paper_code();
    const StateVector q = StateVector::single_qubit(o.q);
    const StateVector encoded = simulate(encode_circuit(), encoder_input(q, o.c));
    double in_block = 0;
    for (const auto& cw : code.block(o.c)) in_block += std::norm(inner_product(cw, encoded));
    const double overlap = std::abs(inner_product(logical_state(code, q, o.c), encoded));
    out << "encoded |" << o.q << ">, c=" << o.c << ": weight in block " << o.c << " = " << format_result_double(in_block)
        << ", |overlap| with the matching codeword combination = " << format_result_double(overlap) << "\n";
    r.ok = in_block >= 1 - kUserTolerance;
    // Only basis inputs have a phase-free target.
    if (o.q == "0" || o.q == "1") r.ok = r.ok && overlap >= 1 - kUserTolerance;
    r.fields.push_back({"in_block", format_result_double(in_block)});
    r.fields.push_back({"overlap", format_result_double(overlap)});
    return finish(out, r);
  }
  r.fields.push_back({"variant", std::string(to_string(variant))});
  if (o.sim_mode == "roundtrip") {
    const PauliString e = PauliString::parse(o.error, 4);
    std::size_t loc = 1;
    if (o.loc) {
      loc = *o.loc;
    } else if (e.weight() == 1) {
      loc = e.support().front();
    }
    const RoundTripReport rep = roundtrip(o.q, o.c, e, loc, variant);
    out << "error " << rep.error.sparse_str() << " at location " << loc << ": quantum output on wire "
        << rep.output_wires.quantum << ", classical on wire " << rep.output_wires.classical
        << (rep.wires_discovered ? "" : " (not discovered; input wires assumed)") << "\n";
    r.ok = rep.passed();
    r.fields.push_back({"fidelity", format_result_double(rep.fidelity_q)});
    r.fields.push_back({"classical_probability", format_result_double(rep.classical_probability)});
    r.fields.push_back({"location", std::to_string(loc)});
    return finish(out, r);
  }
  const auto sweep = roundtrip_sweep(variant);
  std::size_t failed = 0;
  double min_fidelity = 1;
  double min_classical = 1;
  for (const auto& rep : sweep) {
    min_fidelity = std::min(min_fidelity, rep.fidelity_q);
    min_classical = std::min(min_classical, rep.classical_probability);
    if (rep.passed()) continue;
    ++failed;
    out << "FAIL " << rep.error.sparse_str() << " q=" << rep.input_q << " c=" << rep.input_c
        << " fidelity=" << format_result_double(rep.fidelity_q)
        << " classical=" << format_result_double(rep.classical_probability) << "\n";
  }
  if (variant == DecoderVariant::kPublished) out << decoder_discrepancy_report();
  out << sweep.size() - failed << "/" << sweep.size() << " cases passed\n";
  r.ok = failed == 0;
  r.fields.push_back({"cases", std::to_string(sweep.size())});
  r.fields.push_back({"failed", std::to_string(failed)});
  r.fields.push_back({"min_fidelity", format_result_double(min_fidelity)});
  r.fields.push_back({"min_classical", format_result_double(min_classical)});
  return finish(out, r);
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchSpec spec;
  spec.n = o.n;
  spec.block_size = o.big_k;
  const BigInt m = parse_bigint(o.m);
  if (m < 1 || m > 64) throw ArgumentError("search needs 1 <= M <= 64");
  spec.num_blocks = m.convert_to<std::size_t>();
  if (spec.n < 1 || spec.n > kMaxSearchQubits) {
    throw CapacityError("search needs 1 <= n <= " + std::to_string(kMaxSearchQubits));
  }
  spec.errors = parse_error_spec(o.errors.empty() ? "detect:single" : o.errors, spec.n);
  spec.max_terms = o.max_terms;
  spec.complex_phases = o.phases;
  spec.limit = o.limit;
  if (o.no_disjoint) spec.disjoint_supports = false;
  spec.max_space = o.max_space;
  spec.threads = o.threads;

  out << "search space estimate " << format_result_double(estimate_search_space(spec)) << " (disjoint supports "
      << (spec.uses_disjoint_supports() ? "on" : "off") << ")\n";
  const SearchResult res = search(spec);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  for (const auto& c : res.codes) {
    const std::size_t d = hybrid_distance(c.code);
    out << "FOUND n=" << spec.n << " K=" << spec.block_size << " M=" << spec.num_blocks << " d=" << d
        << " key=" << c.hash_hex() << "\n";
    if (!o.out_dir.empty()) {
      const std::filesystem::path path = std::filesystem::path(o.out_dir) / (c.hash_hex() + ".code");
      std::ofstream f(path);
      if (!f) throw ArgumentError("cannot write " + path.string());
      f << serialize_code(c.code);
    }
  }
  out << res.total_survivors << " distinct codes, " << res.codes.size() << " shown, " << res.nodes << " nodes\n";
  ResultLine r;
  r.ok = true;
  r.fields.push_back({"survivors", std::to_string(res.total_survivors)});
  r.fields.push_back({"shown", std::to_string(res.codes.size())});
  r.fields.push_back({"nodes", std::to_string(res.nodes)});
  r.fields.push_back({"estimate", format_result_double(res.estimated_space)});
  return finish(out, r);
}

int cmd_dump(const Options& o, std::ostream& out) {
  const std::string& name = o.circuit_name;
  std::optional<Circuit> c;
  if (name == "encode") {
    c = encode_circuit();
  } else if (name.size() == 7 && name.rfind("decode", 0) == 0 && name[6] >= '1' && name[6] <= '4') {
    c = decoder(static_cast<std::size_t>(name[6] - '0'), parse_variant(o.variant));
  } else {
    throw ArgumentError("unknown circuit '" + name + "'; use encode or decode1..decode4");
  }
  const std::string text = serialize_circuit(*c);
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_file);
    if (!f) throw ArgumentError("cannot write " + o.out_file);
    f << text;
  }
  ResultLine r;
  r.ok = true;
  r.fields.push_back({"circuit", name});
  r.fields.push_back({"wires", std::to_string(c->num_wires())});
  r.fields.push_back({"gates", std::to_string(c->gates().size())});
  return finish(out, r);
}

int usage_failure(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& what) {
  err << "error: " << what << "\n";
  ResultLine r;
  r.ok = false;
  r.fields.push_back({"error", kind});
  out << r.str() << "\n";
  return kExitUsage;
}

}  // namespace

std::optional<std::string> ResultLine::get(std::string_view key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string ResultLine::str() const {
  std::string s = "RESULT ok=" + bool_str(ok);
  for (const auto& [k, v] : fields) s += " " + k + "=" + v;
  return s;
}

ResultLine parse_result_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tok;
  if (!(in >> tok) || tok != "RESULT") throw ParseError(0, "not a RESULT line");
  ResultLine r;
  bool saw_ok = false;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(0, "RESULT field '" + tok + "' is not key=value");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (!saw_ok) {
      if (key != "ok" || (value != "true" && value != "false")) throw ParseError(0, "RESULT must start with ok=<bool>");
      r.ok = value == "true";
      saw_ok = true;
      continue;
    }
    r.fields.emplace_back(std::move(key), std::move(value));
  }
  if (!saw_ok) throw ParseError(0, "RESULT line without ok=");
  return r;
}

std::string format_result_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid quantum-classical code toolkit"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_code = [&](CLI::App* s) { s->add_option("--code", o.code, "paper, simple, or a code file path"); };
  const auto add_errors = [&](CLI::App* s) { s->add_option("--errors", o.errors, "error set, e.g. detect:single,Z1Z2"); };

  auto* verify = app.add_subcommand("verify", "check the hybrid error-correction condition");
  add_code(verify);
  add_errors(verify);
  verify->add_option("--form", o.form)->check(CLI::IsMember({"vector", "operator", "both"}));

  auto* bound = app.add_subcommand("bound", "Hamming-type bounds, exact");
  bound->add_option("kind", o.bound_kind)->required()->check(CLI::IsMember({"quantum", "hybrid", "max-classical"}));
  bound->add_option("-n", o.n)->required();
  bound->add_option("-k", o.k);
  bound->add_option("-M", o.m);
  bound->add_option("-t", o.t);

  auto* distance = app.add_subcommand("distance", "minimum weight of an undetected Pauli");
  add_code(distance);

  auto* degen = app.add_subcommand("degeneracy", "rank of the alpha matrix per block");
  add_code(degen);
  add_errors(degen);

  auto* sim = app.add_subcommand("simulate", "encoder and decoder circuits");
  sim->add_option("mode", o.sim_mode)->required()->check(CLI::IsMember({"encode", "roundtrip", "sweep"}));
  sim->add_option("--q", o.q)->check(CLI::IsMember({"0", "1", "+", "-", "+i", "-i"}));
  sim->add_option("--c", o.c);
  sim->add_option("--error", o.error);
  sim->add_option("--loc", o.loc)->check(CLI::Range(1, 4));
  sim->add_option("--variant", o.variant)->check(CLI::IsMember({"published", "synthesized"}));

  auto* srch = app.add_subcommand("search", "exhaustive search over small codes");
  srch->add_option("-n", o.n)->required();
  srch->add_option("-K", o.big_k);
  srch->add_option("-M", o.m);
  add_errors(srch);
  srch->add_option("--max-terms", o.max_terms);
  srch->add_option("--limit", o.limit);
  srch->add_option("--out", o.out_dir, "directory for code files");
  srch->add_option("--threads", o.threads);
  srch->add_option("--max-space", o.max_space);
  srch->add_flag("--no-disjoint", o.no_disjoint, "do not require disjoint codeword supports");
  srch->add_flag("--phases", o.phases, "allow +-i coefficients");

  auto* dump = app.add_subcommand("dump-circuit", "print a circuit file");
  dump->add_option("circuit", o.circuit_name)->required();
  dump->add_option("--variant", o.variant)->check(CLI::IsMember({"published", "synthesized"}));
  dump->add_option("--out", o.out_file);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage_failure(out, err, "usage", e.what());
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*bound) return cmd_bound(o, out);
    if (*distance) return cmd_distance(o, out);
    if (*degen) return cmd_degeneracy(o, out, err);
    if (*sim) return cmd_simulate(o, out);
    if (*srch) return cmd_search(o, out);
    return cmd_dump(o, out);
  } catch (const ParseError& e) {
    return usage_failure(out, err, "parse", e.what());
  } catch (const CapacityError& e) {
    return usage_failure(out, err, "capacity", e.what());
  } catch (const std::exception& e) {
    return usage_failure(out, err, "input", e.what());
  }
}

}  // namespace hqec
