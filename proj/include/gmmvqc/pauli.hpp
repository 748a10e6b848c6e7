// Copyright 2026 The gmmvqc Authors
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

#ifndef GMMVQC_PAULI_HPP_
#define GMMVQC_PAULI_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmmvqc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Ordered pair of qubit indices carrying one CZ gate. CZ is symmetric, so
// (a, b) and (b, a) act identically; the order is kept only for reporting.
using Edge = std::pair<int, int>;

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("corrupt Pauli value");
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli character '") + c +
                                  "', expected one of I, X, Y, Z");
  }
}

// A signed Pauli word o_0 (x) o_1 (x) ... (x) o_{N-1}. word[k] acts on qubit
// k, and qubit 0 is the least significant bit of a basis-state index. The
// sign tracks the +-1 phases produced by Clifford conjugation; it never
// leaves {+1, -1} under the operations in this header.
struct PauliString {
  std::vector<Pauli> word;
  double sign = 1.0;

  int n_qubits() const { return static_cast<int>(word.size()); }
};

// Parses a length-n string over {I, X, Y, Z}; character k names the Pauli on
// qubit k. The sign of the result is +1.
inline PauliString parse_pauli(const std::string& text, int n_qubits) {
  if (static_cast<int>(text.size()) != n_qubits) {
    throw std::invalid_argument("Pauli word \"" + text + "\" has length " +
                                std::to_string(text.size()) + ", expected " +
                                std::to_string(n_qubits));
  }
  PauliString p;
  p.word.reserve(text.size());
  for (char c : text) p.word.push_back(pauli_from_char(c));
  return p;
}

inline std::string to_string(const PauliString& p) {
  std::string s;
  s.reserve(p.word.size());
  for (Pauli q : p.word) s.push_back(pauli_char(q));
  return s;
}

inline bool same_word(const PauliString& a, const PauliString& b) {
  return a.word == b.word;
}

// Qubits on which the word acts non-trivially.
inline std::vector<int> support(const PauliString& p) {
  std::vector<int> qs;
  for (int k = 0; k < p.n_qubits(); ++k) {
    if (p.word[k] != Pauli::I) qs.push_back(k);
  }
  return qs;
}

inline int support_size(const PauliString& p) {
  int s = 0;
  for (Pauli q : p.word) s += (q != Pauli::I);
  return s;
}

// Positionwise statistics of a word pair, the combinatorial inputs to the
// multi-term gradient bounds:
//   s1  - positions where both words carry X
//   s3  - positions where both words carry Z
//   s13 - positions where the words agree and are not identity
//   s03 - positions where exactly one word carries Z and the other I
struct PairStats {
  int s1 = 0;
  int s3 = 0;
  int s13 = 0;
  int s03 = 0;
};

inline PairStats pair_stats(const PauliString& a, const PauliString& b) {
  if (a.word.size() != b.word.size()) {
    throw std::invalid_argument("pair_stats: word lengths differ (" +
                                std::to_string(a.word.size()) + " vs " +
                                std::to_string(b.word.size()) + ")");
  }
  PairStats st;
  for (std::size_t k = 0; k < a.word.size(); ++k) {
    const Pauli pa = a.word[k];
    const Pauli pb = b.word[k];
    st.s1 += (pa == Pauli::X && pb == Pauli::X);
    st.s3 += (pa == Pauli::Z && pb == Pauli::Z);
    st.s13 += (pa == pb && pa != Pauli::I);
    st.s03 += (pa == Pauli::Z && pb == Pauli::I) ||
              (pa == Pauli::I && pb == Pauli::Z);
  }
  return st;
}

// One row of the CZ conjugation table: CZ^dag (a (x) b) CZ = sign * (a' (x) b').
struct CzEntry {
  Pauli a;
  Pauli b;
  double sign;
};

using CzTable = std::array<CzEntry, 16>;

inline int cz_table_index(Pauli a, Pauli b) {
  return (static_cast<int>(a) << 2) | static_cast<int>(b);
}

namespace detail {

using Cplx = std::complex<double>;
using Mat2 = std::array<std::array<Cplx, 2>, 2>;
using Mat4 = std::array<std::array<Cplx, 4>, 4>;

inline Mat2 pauli_matrix(Pauli p) {
  const Cplx im(0.0, 1.0);
  Mat2 m{};
  switch (p) {
    case Pauli::I: m[0][0] = 1.0; m[1][1] = 1.0; break;
    case Pauli::X: m[0][1] = 1.0; m[1][0] = 1.0; break;
    case Pauli::Y: m[0][1] = -im; m[1][0] = im; break;
    case Pauli::Z: m[0][0] = 1.0; m[1][1] = -1.0; break;
  }
  return m;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return m;
}

}  // namespace detail

// Rebuilds the conjugation table from explicit 4x4 matrix algebra: for every
// pair (a, b) it forms CZ (a (x) b) CZ and locates the unique signed Pauli
// pair equal to it. CZ maps Pauli pairs to Pauli pairs with signs +-1 only;
// anything else means the arithmetic is broken, so it throws.
inline CzTable compute_cz_table() {
  using detail::Cplx;
  using detail::Mat4;
  // CZ = diag(1, 1, 1, -1); self-inverse, so conjugation needs no adjoint.
  const std::array<double, 4> cz = {1.0, 1.0, 1.0, -1.0};
  const std::array<Pauli, 4> paulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

  CzTable table{};
  for (Pauli a : paulis) {
    for (Pauli b : paulis) {
      Mat4 m = detail::kron(detail::pauli_matrix(a), detail::pauli_matrix(b));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] *= cz[i] * cz[j];

      bool found = false;
      for (Pauli ra : paulis) {
        for (Pauli rb : paulis) {
          const Mat4 cand =
              detail::kron(detail::pauli_matrix(ra), detail::pauli_matrix(rb));
          for (double sign : {1.0, -1.0}) {
            double err = 0.0;
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j)
                err = std::max(err, std::abs(m[i][j] - sign * cand[i][j]));
            if (err < 1e-12) {
              table[cz_table_index(a, b)] = CzEntry{ra, rb, sign};
              found = true;
            }
          }
        }
      }
      if (!found) {
        throw std::logic_error("CZ conjugation of a Pauli pair is not a "
                               "signed Pauli pair; matrix arithmetic broken");
      }
    }
  }
  return table;
}

inline const CzTable& cz_table() {
  static const CzTable table = compute_cz_table();
  return table;
}

// Conjugates p by the CZ gate on `edge`: returns CZ^dag p CZ with the sign
// folded into the result. Heisenberg-picture counterpart of apply_cz.
inline PauliString cz_conjugate(const PauliString& p, const Edge& edge) {
  const int n = p.n_qubits();
  if (edge.first < 0 || edge.first >= n || edge.second < 0 ||
      edge.second >= n) {
    throw std::out_of_range("cz_conjugate: edge (" +
                            std::to_string(edge.first) + ", " +
                            std::to_string(edge.second) +
                            ") outside a " + std::to_string(n) +
                            "-qubit word");
  }
  if (edge.first == edge.second) {
    throw std::invalid_argument("cz_conjugate: edge endpoints coincide");
  }
  const CzEntry& e =
      cz_table()[cz_table_index(p.word[edge.first], p.word[edge.second])];
  PauliString out = p;
  out.word[edge.first] = e.a;
  out.word[edge.second] = e.b;
  out.sign *= e.sign;
  return out;
}

// Conjugates by a full CZ layer. The gates commute pairwise (all diagonal),
// so the edge order does not affect the result.
inline PauliString cz_conjugate_layer(const PauliString& p,
                                      const std::vector<Edge>& edges) {
  PauliString out = p;
  for (const Edge& e : edges) out = cz_conjugate(out, e);
  return out;
}

// One measurement term: coeff * (Pauli word). Stored words carry sign +1;
// construction folds signs into the coefficient.
struct ObsTerm {
  double coeff = 0.0;
  PauliString op;
};

// A Hermitian observable sum_t coeff_t * P_t over a fixed qubit count.
// Construction merges duplicate words (coefficients added), drops terms whose
// merged coefficient is exactly zero, and rejects length mismatches and
// non-finite coefficients.
class Observable {
 public:
  Observable(int n_qubits, std::vector<ObsTerm> terms)
      : n_qubits_(n_qubits) {
    if (n_qubits < 1) {
      throw std::invalid_argument("Observable: n_qubits must be >= 1");
    }
    for (ObsTerm& t : terms) {
      if (t.op.n_qubits() != n_qubits) {
        throw std::invalid_argument(
            "Observable: term \"" + to_string(t.op) + "\" acts on " +
            std::to_string(t.op.n_qubits()) + " qubits, expected " +
            std::to_string(n_qubits));
      }
      if (!std::isfinite(t.coeff) || !std::isfinite(t.op.sign) ||
          t.op.sign == 0.0) {
        throw std::invalid_argument("Observable: non-finite term");
      }
      t.coeff *= t.op.sign;
      t.op.sign = 1.0;
      bool merged = false;
      for (ObsTerm& kept : terms_) {
        if (same_word(kept.op, t.op)) {
          kept.coeff += t.coeff;
          merged = true;
          break;
        }
      }
      if (!merged) terms_.push_back(std::move(t));
    }
    std::vector<ObsTerm> nonzero;
    nonzero.reserve(terms_.size());
    for (ObsTerm& t : terms_) {
      if (t.coeff != 0.0) nonzero.push_back(std::move(t));
    }
    terms_ = std::move(nonzero);
  }

  int n_qubits() const { return n_qubits_; }
  const std::vector<ObsTerm>& terms() const { return terms_; }
  int n_terms() const { return static_cast<int>(terms_.size()); }

  const ObsTerm& term(int k) const {
    if (k < 0 || k >= n_terms()) {
      throw std::out_of_range("Observable: term index " + std::to_string(k) +
                              " out of range [0, " +
                              std::to_string(n_terms()) + ")");
    }
    return terms_[static_cast<std::size_t>(k)];
  }

  bool all_coeffs_nonnegative() const {
    for (const ObsTerm& t : terms_) {
      if (t.coeff < 0.0) return false;
    }
    return true;
  }

 private:
  int n_qubits_;
  std::vector<ObsTerm> terms_;
};

}  // namespace gmmvqc

#endif  // GMMVQC_PAULI_HPP_
