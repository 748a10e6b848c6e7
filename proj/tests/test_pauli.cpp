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

#include <catch2/catch_amalgamated.hpp>

#include "gmmvqc/pauli.hpp"
#include "oracles.hpp"

using namespace gmmvqc;

TEST_CASE("pauli words parse and print round trip") {
  const PauliString p = parse_pauli("IXYZ", 4);
  REQUIRE(p.n_qubits() == 4);
  REQUIRE(p.word[0] == Pauli::I);
  REQUIRE(p.word[1] == Pauli::X);
  REQUIRE(p.word[2] == Pauli::Y);
  REQUIRE(p.word[3] == Pauli::Z);
  REQUIRE(p.sign == 1.0);
  REQUIRE(to_string(p) == "IXYZ");
}

TEST_CASE("pauli parsing rejects bad input") {
  REQUIRE_THROWS_AS(parse_pauli("IX", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_pauli("IXQZ", 4), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_pauli("", 1), std::invalid_argument);
}

TEST_CASE("support and pair statistics") {
  const PauliString a = parse_pauli("XIZZY", 5);
  REQUIRE(support(a) == std::vector<int>{0, 2, 3, 4});
  REQUIRE(support_size(a) == 4);
  REQUIRE(support_size(parse_pauli("III", 3)) == 0);

  const PauliString b = parse_pauli("XZZIY", 5);
  const PairStats st = pair_stats(a, b);
  REQUIRE(st.s1 == 1);   // X meets X only at position 0
  REQUIRE(st.s3 == 1);   // Z meets Z only at position 2
  REQUIRE(st.s13 == 3);  // positions 0, 2, 4 agree and are not identity
  REQUIRE(st.s03 == 2);  // positions 1 and 3 pair Z with I
  REQUIRE_THROWS_AS(pair_stats(a, parse_pauli("XX", 2)),
                    std::invalid_argument);
}

TEST_CASE("cz conjugation table matches the dense oracle on all 16 pairs") {
  const CzTable& table = cz_table();
  for (int ia = 0; ia < 4; ++ia) {
    for (int ib = 0; ib < 4; ++ib) {
      const Pauli a = static_cast<Pauli>(ia);
      const Pauli b = static_cast<Pauli>(ib);
      const CzEntry& got = table[cz_table_index(a, b)];
      const oracle::CzConjugation want = oracle::cz_conjugate_oracle(a, b);
      INFO("input pair " << pauli_char(a) << pauli_char(b));
      REQUIRE(got.a == want.a);
      REQUIRE(got.b == want.b);
      REQUIRE(got.sign == want.sign);
    }
  }
}

TEST_CASE("cz conjugation spot checks") {
  const CzTable& t = cz_table();
  // X (x) I picks up a Z on the partner qubit.
  const CzEntry& xi = t[cz_table_index(Pauli::X, Pauli::I)];
  REQUIRE(xi.a == Pauli::X);
  REQUIRE(xi.b == Pauli::Z);
  REQUIRE(xi.sign == 1.0);
  // Z (x) Z is left alone: CZ is diagonal.
  const CzEntry& zz = t[cz_table_index(Pauli::Z, Pauli::Z)];
  REQUIRE(zz.a == Pauli::Z);
  REQUIRE(zz.b == Pauli::Z);
  REQUIRE(zz.sign == 1.0);
  // Y (x) X maps to X (x) Y with a sign flip.
  const CzEntry& yx = t[cz_table_index(Pauli::Y, Pauli::X)];
  REQUIRE(yx.a == Pauli::X);
  REQUIRE(yx.b == Pauli::Y);
  REQUIRE(yx.sign == -1.0);
  // Identity pairs stay identity.
  const CzEntry& ii = t[cz_table_index(Pauli::I, Pauli::I)];
  REQUIRE(ii.a == Pauli::I);
  REQUIRE(ii.b == Pauli::I);
  REQUIRE(ii.sign == 1.0);
}

TEST_CASE("cz_conjugate acts on the edge qubits only") {
  PauliString p = parse_pauli("XIY", 3);
  const PauliString q = cz_conjugate(p, {0, 1});
  REQUIRE(to_string(q) == "XZY");
  REQUIRE(q.sign == 1.0);

  // The untouched qubit keeps its letter even when the edge pair flips sign.
  const PauliString r = cz_conjugate(parse_pauli("YXZ", 3), {0, 1});
  REQUIRE(to_string(r) == "XYZ");
  REQUIRE(r.sign == -1.0);

  REQUIRE_THROWS_AS(cz_conjugate(p, {0, 3}), std::out_of_range);
  REQUIRE_THROWS_AS(cz_conjugate(p, {-1, 1}), std::out_of_range);
  REQUIRE_THROWS_AS(cz_conjugate(p, {2, 2}), std::invalid_argument);
}

TEST_CASE("cz_conjugate_layer composes single-edge conjugations") {
  const PauliString p = parse_pauli("XXXX", 4);
  const std::vector<Edge> edges = {{0, 1}, {2, 3}};
  const PauliString via_layer = cz_conjugate_layer(p, edges);
  PauliString via_steps = p;
  for (const Edge& e : edges) via_steps = cz_conjugate(via_steps, e);
  REQUIRE(to_string(via_layer) == to_string(via_steps));
  REQUIRE(via_layer.sign == via_steps.sign);
}

TEST_CASE("observable merges duplicate words and drops zeros") {
  const int n = 2;
  std::vector<ObsTerm> terms;
  terms.push_back(ObsTerm{1.5, parse_pauli("ZZ", n)});
  terms.push_back(ObsTerm{0.5, parse_pauli("ZZ", n)});
  terms.push_back(ObsTerm{1.0, parse_pauli("XI", n)});
  terms.push_back(ObsTerm{-1.0, parse_pauli("XI", n)});
  PauliString signed_word = parse_pauli("IZ", n);
  signed_word.sign = -1.0;
  terms.push_back(ObsTerm{2.0, signed_word});

  const Observable obs(n, std::move(terms));
  REQUIRE(obs.n_terms() == 2);
  REQUIRE(to_string(obs.term(0).op) == "ZZ");
  REQUIRE(obs.term(0).coeff == 2.0);
  // The sign prefix folds into the coefficient and the stored sign is +1.
  REQUIRE(to_string(obs.term(1).op) == "IZ");
  REQUIRE(obs.term(1).coeff == -2.0);
  REQUIRE(obs.term(1).op.sign == 1.0);
  REQUIRE_FALSE(obs.all_coeffs_nonnegative());
  REQUIRE_THROWS_AS(obs.term(2), std::out_of_range);
  REQUIRE_THROWS_AS(obs.term(-1), std::out_of_range);
}

TEST_CASE("observable validates qubit counts") {
  REQUIRE_THROWS_AS(
      Observable(3, {ObsTerm{1.0, parse_pauli("XX", 2)}}),
      std::invalid_argument);
  REQUIRE_THROWS_AS(Observable(0, {}), std::invalid_argument);
}
