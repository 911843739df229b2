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

#include "hqec/code.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "hqec/errors.h"

namespace hqec {

namespace {

constexpr std::string_view kPaperCodeText =
    "n 4\n"
    "block 0\n"
    "cw +1 0000 ; +1 1111\n"
    "cw +1 0011 ; -1 1100\n"
    "block 1\n"
    "cw +1 0101 ; +1 1010\n"
    "cw +1 1001 ; -1 0110\n";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

// Strict decimal parse; "" / "+" / "-" mean the unit magnitude of an
// imaginary part and are handled by the caller.
std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  // strtod accepts hex floats and "inf"; only plain decimals are allowed here.
  for (char c : buf) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-' || c == 'e' || c == 'E')) {
      return std::nullopt;
    }
  }
  return v;
}

std::size_t parse_index(std::string_view s, std::size_t line, const char* what) {
  if (s.empty()) throw ParseError(line, std::string("missing ") + what);
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) throw ParseError(line, std::string(what) + " too large");
  }
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) {
    const std::string re = format_double(c.real());
    return (c.real() >= 0 ? "+" : "") + re;
  }
  std::string out = format_double(c.real());
  if (c.real() >= 0) out = "+" + out;
  out += (c.imag() >= 0 ? "+" : "-") + format_double(std::abs(c.imag())) + "i";
  return out;
}

}  // namespace

HybridCode::HybridCode(std::vector<std::vector<StateVector>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw ValidationError("hybrid code needs at least one block");
  k_ = blocks_.front().size();
  if (k_ == 0) throw ValidationError("hybrid code blocks must be nonempty");
  n_ = blocks_.front().front().num_qubits();
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].size() != k_) {
      throw ValidationError("block " + std::to_string(b) + " has " + std::to_string(blocks_[b].size()) +
                            " codewords, block 0 has " + std::to_string(k_) + "; all blocks must have equal size");
    }
    for (const auto& cw : blocks_[b]) {
      if (cw.num_qubits() != n_) throw DimensionError("codewords must all be on " + std::to_string(n_) + " qubits");
    }
  }
  const std::size_t total = blocks_.size() * k_;
  if (n_ < 64 && total > (std::size_t{1} << n_)) {
    throw ValidationError(std::to_string(total) + " orthonormal codewords cannot fit in dimension 2^" + std::to_string(n_));
  }
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = a; b < total; ++b) {
      const auto& u = blocks_[a / k_][a % k_];
      const auto& v = blocks_[b / k_][b % k_];
      const Complex overlap = inner_product(u, v);
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(overlap - expected) > kUserTolerance) {
        std::ostringstream os;
        os << "codewords (block " << a / k_ << ", " << a % k_ << ") and (block " << b / k_ << ", " << b % k_
           << ") are not orthonormal: overlap " << overlap.real() << (overlap.imag() < 0 ? "-" : "+")
           << std::abs(overlap.imag()) << "i";
        throw ValidationError(os.str());
      }
    }
  }
}

std::vector<StateVector> HybridCode::flat() const {
  std::vector<StateVector> out;
  out.reserve(blocks_.size() * k_);
  for (const auto& block : blocks_) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::string CodeParameters::str() const {
  const auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("?"); };
  return "[[" + std::to_string(n) + "," + show(k) + ":" + show(m) + "," + show(d) + "]]";
}

CodeParameters parameters(const HybridCode& code, std::optional<std::size_t> distance) {
  const auto log2_exact = [](std::size_t v) -> std::optional<std::size_t> {
    if (v == 0 || (v & (v - 1)) != 0) return std::nullopt;
    std::size_t k = 0;
    while ((std::size_t{1} << k) < v) ++k;
    return k;
  };
  return CodeParameters{code.num_qubits(), log2_exact(code.block_size()), log2_exact(code.num_blocks()), distance};
}

Complex parse_coefficient(std::string_view literal) {
  const std::string_view s = trim(literal);
  if (s.empty()) throw ParseError(0, "empty coefficient");
  const auto fail = [&]() -> ParseError { return ParseError(0, "bad coefficient '" + std::string(s) + "'"); };
  if (s.back() != 'i') {
    auto re = parse_real(s);
    if (!re) throw fail();
    return {*re, 0.0};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  const std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  double re = 0.0;
  if (!re_part.empty()) {
    auto v = parse_real(re_part);
    if (!v) throw fail();
    re = *v;
  }
  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    auto v = parse_real(im_part);
    if (!v) throw fail();
    im = *v;
  }
  return {re, im};
}

HybridCode parse_code(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<std::vector<StateVector>> blocks;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const auto tokens = split_ws(line);
    const std::string_view keyword = tokens.front();
    if (!n) {
      if (keyword != "n" || tokens.size() != 2) throw ParseError(line_no, "expected 'n <qubits>' as the first line");
      n = parse_index(tokens[1], line_no, "qubit count");
      if (*n == 0) throw ParseError(line_no, "qubit count must be positive");
      if (*n > kMaxQubits) throw CapacityError("line " + std::to_string(line_no) + ": qubit count exceeds " + std::to_string(kMaxQubits));
      continue;
    }
    if (keyword == "n") throw ParseError(line_no, "duplicate 'n' line");
    if (keyword == "block") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'block <index>'");
      const std::size_t index = parse_index(tokens[1], line_no, "block index");
      if (index != blocks.size()) {
        throw ParseError(line_no, "block indices must count up from 0; expected block " + std::to_string(blocks.size()));
      }
      blocks.emplace_back();
      continue;
    }
    if (keyword == "cw") {
      if (blocks.empty()) throw ParseError(line_no, "codeword before any 'block' line");
      std::vector<Complex> amps(std::size_t{1} << *n);
      std::set<std::size_t> seen;
      std::string_view rest = trim(line.substr(2));
      if (rest.empty()) throw ParseError(line_no, "codeword has no terms");
      std::size_t tpos = 0;
      while (tpos <= rest.size()) {
        std::size_t tend = rest.find(';', tpos);
        if (tend == std::string_view::npos) tend = rest.size();
        const auto term = split_ws(trim(rest.substr(tpos, tend - tpos)));
        tpos = tend + 1;
        if (term.size() != 2) throw ParseError(line_no, "each term must be '<coefficient> <bitstring>'");
        Complex coef;
        try {
          coef = parse_coefficient(term[0]);
        } catch (const ParseError& e) {
          throw ParseError(line_no, e.what());
        }
        const std::string_view bits = term[1];
        for (char c : bits) {
          if (c != '0' && c != '1') throw ParseError(line_no, "bitstring '" + std::string(bits) + "' must contain only 0 and 1");
        }
        if (bits.size() != *n) {
          throw DimensionError("line " + std::to_string(line_no) + ": bitstring '" + std::string(bits) + "' has length " +
                               std::to_string(bits.size()) + ", expected " + std::to_string(*n));
        }
        std::size_t index = 0;
        for (char c : bits) index = (index << 1) | static_cast<std::size_t>(c - '0');
        if (!seen.insert(index).second) throw ParseError(line_no, "duplicate bitstring '" + std::string(bits) + "' in codeword");
        amps[index] += coef;
        if (tend == rest.size()) break;
      }
      try {
        blocks.back().push_back(StateVector::normalized(*n, std::move(amps)));
      } catch (const DegenerateInputError&) {
        throw DegenerateInputError("line " + std::to_string(line_no) + ": codeword sums to the zero vector");
      }
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
  }
  if (!n) throw ParseError(line_no, "missing 'n <qubits>' line");
  if (blocks.empty()) throw ParseError(line_no, "code has no blocks");
  return HybridCode(std::move(blocks));
}

HybridCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open code file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

std::string serialize_code(const HybridCode& code) {
  const std::size_t n = code.num_qubits();
  std::ostringstream os;
  os << "n " << n << "\n";
  for (std::size_t b = 0; b < code.num_blocks(); ++b) {
    os << "block " << b << "\n";
    for (const auto& cw : code.block(b)) {
      os << "cw";
      bool first = true;
      for (std::size_t i = 0; i < cw.dimension(); ++i) {
        if (std::abs(cw[i]) == 0.0) continue;
        std::string bits(n, '0');
        for (std::size_t q = 0; q < n; ++q) {
          if (i & (std::size_t{1} << (n - 1 - q))) bits[q] = '1';
        }
        os << (first ? " " : " ; ") << format_coefficient(cw[i]) << " " << bits;
        first = false;
      }
      os << "\n";
    }
  }
  return os.str();
}

Operator projector(const HybridCode& code) {
  Operator p = Operator::zero(code.num_qubits());
  for (const auto& block : code.blocks()) {
    for (const auto& cw : block) p += Operator::outer(cw);
  }
  return p;
}

Operator block_projector(const HybridCode& code, std::size_t block) {
  if (block >= code.num_blocks()) {
    throw ArgumentError("block index " + std::to_string(block) + " out of range 0.." + std::to_string(code.num_blocks() - 1));
  }
  Operator p = Operator::zero(code.num_qubits());
  for (const auto& cw : code.block(block)) p += Operator::outer(cw);
  return p;
}

std::string_view paper_code_text() { return kPaperCodeText; }

HybridCode builtin_paper_code() { return parse_code(kPaperCodeText); }

HybridCode builtin_simple_code() {
  return HybridCode({{StateVector::basis("00"), StateVector::basis("01")}, {StateVector::basis("10"), StateVector::basis("11")}});
}

}  // namespace hqec
