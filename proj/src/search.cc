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

#include "hqec/search.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "hqec/errors.h"

namespace hqec {

namespace {

struct Term {
  std::uint32_t index;
  Complex coef;
};

// One admissible codeword: sparse terms sorted by basis index.
struct Option {
  std::vector<Term> terms;
  std::uint64_t support = 0;
};

// A Pauli product as |t> -> phase (-1)^{|t & z|} |t ^ x>.
struct SparseOp {
  std::uint64_t x;
  std::uint64_t z;
  Complex phase;
};

std::vector<Option> build_options(const SearchSpec& spec) {
  const std::uint32_t dim = std::uint32_t{1} << spec.n;
  const std::vector<Complex> alphabet = spec.complex_phases ? std::vector<Complex>{1.0, -1.0, Complex(0, 1), Complex(0, -1)}
                                                            : std::vector<Complex>{1.0, -1.0};
  std::vector<Option> out;
  for (std::size_t size = 1; size <= std::min<std::size_t>(spec.max_terms, dim); ++size) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    std::vector<std::uint32_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = static_cast<std::uint32_t>(k);
    while (true) {
      std::size_t patterns = 1;
      for (std::size_t k = 1; k < size; ++k) patterns *= alphabet.size();
      for (std::size_t pattern = 0; pattern < patterns; ++pattern) {
        Option opt;
        std::size_t rest = pattern;
        for (std::size_t k = 0; k < size; ++k) {
          Complex coef = 1.0;
          if (k > 0) {
            coef = alphabet[rest % alphabet.size()];
            rest /= alphabet.size();
          }
          opt.terms.push_back({idx[k], coef * scale});
          opt.support |= std::uint64_t{1} << idx[k];
        }
        out.push_back(std::move(opt));
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == dim - size + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

// <a| op |b> with both vectors sparse.
Complex bracket(const Option& a, const SparseOp& op, const Option& b) {
  Complex total = 0;
  for (const auto& tb : b.terms) {
    const std::uint64_t image = tb.index ^ op.x;
    const bool flip = std::popcount(static_cast<std::uint64_t>(tb.index) & op.z) & 1;
    for (const auto& ta : a.terms) {
      if (ta.index == image) total += std::conj(ta.coef) * (flip ? -op.phase : op.phase) * tb.coef;
    }
  }
  return total;
}

std::vector<SparseOp> distinct_products(const ErrorSetSpec& errors) {
  std::vector<SparseOp> ops;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& pair : expand_pairs(errors)) {
    const PauliString p = pair.product();
    const auto key = std::make_pair(p.x_mask(), p.z_mask());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    const unsigned y_count = static_cast<unsigned>(std::popcount(key.first & key.second));
    ops.push_back({key.first, key.second, p.with_phase((p.phase_exponent() + y_count) % 4).phase()});
  }
  return ops;
}

void validate(const SearchSpec& spec) {
  if (spec.n < 1) throw ArgumentError("search needs n >= 1");
  if (spec.n > kMaxSearchQubits) {
    throw CapacityError("search on " + std::to_string(spec.n) + " qubits exceeds the limit of " + std::to_string(kMaxSearchQubits));
  }
  if (spec.block_size < 1 || spec.num_blocks < 1) throw ArgumentError("search needs K >= 1 and M >= 1");
  if (spec.block_size * spec.num_blocks > (std::size_t{1} << spec.n)) throw ArgumentError("M*K exceeds 2^n");
  if (spec.max_terms < 1) throw ArgumentError("max_terms must be at least 1");
  if (spec.limit < 1) throw ArgumentError("limit must be at least 1");
  if (spec.errors.num_qubits != spec.n) throw DimensionError("error set and search qubit counts differ");
  const double estimate = estimate_search_space(spec);
  if (estimate > spec.max_space) {
    std::ostringstream os;
    os << "search space estimate " << estimate << " exceeds the cap " << spec.max_space;
    throw CapacityError(os.str());
  }
}

// Depth-first placement of codewords into M*K slots, block-major.
class Engine {
 public:
  Engine(const SearchSpec& spec, std::vector<Option> options, std::vector<SparseOp> ops, bool break_symmetry)
      : k_(spec.block_size),
        slots_(spec.block_size * spec.num_blocks),
        disjoint_(spec.uses_disjoint_supports()),
        break_symmetry_(break_symmetry),
        options_(std::move(options)),
        ops_(std::move(ops)) {}

  const std::vector<Option>& options() const { return options_; }

  // Runs the search with slot 0 restricted to options o where
  // o % stride == offset. Returns false if `visit` stopped it.
  bool run(std::size_t offset, std::size_t stride, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    chosen_.clear();
    return descend(0, 0, offset, stride, visit);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool compatible(std::size_t slot, std::size_t candidate) const {
    const Option& c = options_[candidate];
    const std::size_t block = slot / k_;
    for (const auto& op : ops_) {
      for (std::size_t r = 0; r < slot; ++r) {
        if (std::abs(bracket(options_[chosen_[r]], op, c)) > kUserTolerance) return false;
      }
      if (slot % k_ != 0) {
        const Option& first = options_[chosen_[block * k_]];
        if (std::abs(bracket(c, op, c) - bracket(first, op, first)) > kUserTolerance) return false;
      }
    }
    return true;
  }

  bool descend(std::size_t slot, std::uint64_t used, std::size_t offset, std::size_t stride,
               const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (slot == slots_) return visit(chosen_);
    std::size_t start = 0;
    if (break_symmetry_ && slot > 0) {
      // Increasing inside a block; block leaders increasing across blocks.
      start = (slot % k_ != 0 ? chosen_[slot - 1] : chosen_[slot - k_]) + 1;
    }
    for (std::size_t o = start; o < options_.size(); ++o) {
      if (slot == 0 && o % stride != offset) continue;
      if (disjoint_ && (options_[o].support & used)) continue;
      ++nodes_;
      if (!compatible(slot, o)) continue;
      chosen_.push_back(o);
      const bool keep_going = descend(slot + 1, used | options_[o].support, offset, stride, visit);
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t k_;
  std::size_t slots_;
  bool disjoint_;
  bool break_symmetry_;
  std::vector<Option> options_;
  std::vector<SparseOp> ops_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

HybridCode assemble(const SearchSpec& spec, const std::vector<Option>& options, const std::vector<std::size_t>& chosen) {
  const std::size_t dim = std::size_t{1} << spec.n;
  std::vector<std::vector<StateVector>> blocks(spec.num_blocks);
  for (std::size_t s = 0; s < chosen.size(); ++s) {
    std::vector<Complex> amps(dim);
    for (const auto& t : options[chosen[s]].terms) amps[t.index] = t.coef;
    blocks[s / spec.block_size].push_back(StateVector::normalized(spec.n, std::move(amps)));
  }
  return HybridCode(std::move(blocks));
}

std::string codeword_key(const StateVector& s) {
  Complex pivot = 0;
  for (const auto& a : s.amplitudes()) {
    if (std::abs(a) > kUserTolerance) {
      pivot = a;
      break;
    }
  }
  const Complex unphase = std::conj(pivot) / std::abs(pivot);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const Complex a = s[i] * unphase;
    if (std::abs(a) <= kUserTolerance) continue;
    if (!first) os << ",";
    first = false;
    os << i << ":" << std::llround(a.real() * 1e9) << ":" << std::llround(a.imag() * 1e9);
  }
  return os.str();
}

}  // namespace

bool SearchSpec::uses_disjoint_supports() const {
  if (disjoint_supports) return *disjoint_supports;
  return max_terms * block_size * num_blocks <= (std::size_t{1} << n);
}

double estimate_search_space(const SearchSpec& spec) {
  const double dim = std::ldexp(1.0, static_cast<int>(spec.n));
  const double alphabet = spec.complex_phases ? 4.0 : 2.0;
  double options = 0;
  double binom = 1;
  for (std::size_t s = 1; s <= spec.max_terms && s <= dim; ++s) {
    binom = binom * (dim - static_cast<double>(s) + 1) / static_cast<double>(s);
    options += binom * std::pow(alphabet, static_cast<double>(s - 1));
  }
  return std::pow(options, static_cast<double>(spec.block_size * spec.num_blocks));
}

std::size_t enumerate_candidates(const SearchSpec& spec, const std::function<bool(const HybridCode&)>& visit) {
  validate(spec);
  const ErrorSetSpec identity_only = ErrorSetSpec::make(CheckMode::kDetect, spec.n, {});
  Engine engine(spec, build_options(spec), distinct_products(identity_only), false);
  std::size_t count = 0;
  engine.run(0, 1, [&](const std::vector<std::size_t>& chosen) {
    ++count;
    return visit(assemble(spec, engine.options(), chosen));
  });
  return count;
}

std::uint64_t CanonicalCode::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CanonicalCode::hash_hex() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t h = hash();
  for (std::size_t i = 16; i-- > 0;) {
    out[i] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

CanonicalCode canonicalize(const HybridCode& code) {
  std::vector<std::string> block_keys;
  for (const auto& block : code.blocks()) {
    std::vector<std::string> words;
    for (const auto& cw : block) words.push_back(codeword_key(cw));
    std::sort(words.begin(), words.end());
    std::string joined;
    for (const auto& w : words) joined += "[" + w + "]";
    block_keys.push_back(joined);
  }
  std::sort(block_keys.begin(), block_keys.end());
  std::string key = "n" + std::to_string(code.num_qubits()) + "K" + std::to_string(code.block_size()) + "M" +
                    std::to_string(code.num_blocks());
  for (const auto& b : block_keys) key += "|" + b;
  return CanonicalCode{code, std::move(key)};
}

SearchResult search(const SearchSpec& spec) {
  validate(spec);
  SearchResult result;
  result.estimated_space = estimate_search_space(spec);
  const std::vector<Option> options = build_options(spec);
  const std::vector<SparseOp> ops = distinct_products(spec.errors);

  const unsigned workers = std::max(1u, spec.threads);
  std::vector<std::vector<std::vector<std::size_t>>> found(workers);
  std::vector<std::uint64_t> nodes(workers, 0);
  const auto work = [&](unsigned w) {
    Engine engine(spec, options, ops, true);
    engine.run(w, workers, [&](const std::vector<std::size_t>& chosen) {
      found[w].push_back(chosen);
      return true;
    });
    nodes[w] = engine.nodes();
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, CanonicalCode> unique;
  for (unsigned w = 0; w < workers; ++w) {
    result.nodes += nodes[w];
    for (const auto& chosen : found[w]) {
      HybridCode code = assemble(spec, options, chosen);
      if (!check_vector_form(code, spec.errors).ok) continue;
      CanonicalCode canon = canonicalize(code);
      unique.try_emplace(canon.key, std::move(canon));
    }
  }
  result.total_survivors = unique.size();
  for (auto& [key, canon] : unique) {
    if (result.codes.size() >= spec.limit) break;
    result.codes.push_back(std::move(canon));
  }
  return result;
}

}  // namespace hqec
