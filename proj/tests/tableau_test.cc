// Copyright 2026 The t-rot-opt Authors
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

#include "trot/tableau.h"

#include <gtest/gtest.h>

#include <complex>

#include "test_support.h"
#include "trot/errors.h"
#include "trot/verify.h"

using namespace trot;
using namespace trot::testing;

namespace {

PauliProduct P(const char *s) { return PauliProduct::from_str(s); }

CliffordTableau single_gate(std::size_t n, GateKind kind, std::vector<std::size_t> qubits) {
  CliffordTableau t(n);
  t.apply({kind, std::move(qubits)});
  return t;
}

// Every signed Pauli on n qubits except the identity.
std::vector<PauliProduct> all_paulis(std::size_t n, bool with_identity = false) {
  std::vector<PauliProduct> out;
  std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = with_identity ? 0 : 1; code < total; ++code) {
    PauliProduct p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, "IXYZ"[(code >> (2 * q)) & 3]);
    out.push_back(p);
    out.push_back(-p);
  }
  return out;
}

}  // namespace

TEST(tableau, apply_gate_examples) {
  auto h = apply_gate(CliffordTableau(1), {GateKind::H, {0}});
  EXPECT_EQ(h.z_image(0), P("X"));
  auto s = apply_gate(CliffordTableau(1), {GateKind::S, {0}});
  EXPECT_EQ(s.x_image(0), P("Y"));
  auto cx = apply_gate(CliffordTableau(2), {GateKind::CNOT, {0, 1}});
  EXPECT_EQ(cx.x_image(0), P("XX"));
  EXPECT_EQ(cx.z_image(1), P("ZZ"));
  EXPECT_EQ(cx.x_image(1), P("IX"));
  EXPECT_EQ(cx.z_image(0), P("ZI"));
  EXPECT_THROW(apply_gate(CliffordTableau(1), {GateKind::T, {0}}), UnsupportedGateError);
}

TEST(tableau, conjugate_examples) {
  EXPECT_EQ(conjugate(CliffordTableau(2), P("-ZX")), P("-ZX"));
  EXPECT_EQ(conjugate(single_gate(1, GateKind::H, {0}), P("Z")), P("X"));
  EXPECT_EQ(conjugate(single_gate(1, GateKind::X, {0}), P("Z")), P("-Z"));
  EXPECT_THROW(conjugate(CliffordTableau(2), P("Z")), std::invalid_argument);
}

TEST(tableau, compose_and_invert_examples) {
  auto h = single_gate(1, GateKind::H, {0});
  EXPECT_TRUE(compose(h, h).is_identity());
  EXPECT_TRUE(invert(CliffordTableau(3)).is_identity());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto t = CliffordTableau::from_circuit(random_clifford_circuit(rng, n, 30));
    EXPECT_TRUE(compose(t, invert(t)).is_identity());
    EXPECT_TRUE(compose(invert(t), t).is_identity());
    PauliProduct p = random_pauli(rng, n);
    EXPECT_EQ(conjugate(invert(t), conjugate(t, p)), p);
  }
  EXPECT_THROW(compose(CliffordTableau(1), CliffordTableau(2)), std::invalid_argument);
}

TEST(tableau, compose_order_is_right_to_left) {
  std::mt19937_64 rng(6);
  Circuit first = random_clifford_circuit(rng, 3, 20);
  Circuit second = random_clifford_circuit(rng, 3, 20);
  Circuit both = first;
  both.append(second);
  EXPECT_EQ(compose(CliffordTableau::from_circuit(second), CliffordTableau::from_circuit(first)),
            CliffordTableau::from_circuit(both));
}

TEST(tableau, prepend_matches_apply_in_reverse) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = random_clifford_circuit(rng, 4, 25);
    CliffordTableau built(4);
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) built.prepend(*it);
    EXPECT_EQ(built, CliffordTableau::from_circuit(c));
  }
}

TEST(tableau, apply_preserves_symplectic_validity) {
  std::mt19937_64 rng(9);
  CliffordTableau t(5);
  for (int step = 0; step < 300; ++step) {
    t.apply(random_clifford_gate(rng, 5));
    ASSERT_TRUE(t.is_symplectic());
  }
}

TEST(tableau, conjugation_matches_dense_and_preserves_commutation) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    Circuit c = random_clifford_circuit(rng, n, 15);
    auto t = CliffordTableau::from_circuit(c);
    DenseUnitary u = unitary_of(c);
    PauliProduct p = random_pauli(rng, n);
    PauliProduct q = random_pauli(rng, n);
    DenseUnitary dense = u * pauli_matrix(p) * u.adjoint();
    ASSERT_LT((dense - pauli_matrix(conjugate(t, p))).norm(), 1e-9) << p.str();
    EXPECT_EQ(commutes(p, q), commutes(conjugate(t, p), conjugate(t, q)));
  }
}

TEST(tableau, pi_over_2_rotation_law_on_all_two_qubit_pairs) {
  const std::complex<double> half_one_plus_i(0.5, 0.5);
  const std::complex<double> i(0, 1);
  for (const PauliProduct &q : all_paulis(2)) {
    auto v = CliffordTableau::pi_over_2_rotation(q);
    ASSERT_TRUE(v.is_symplectic());
    DenseUnitary vd = half_one_plus_i * (DenseUnitary::Identity(4, 4) - i * pauli_matrix(q));
    for (const PauliProduct &s : all_paulis(2, true)) {
      PauliProduct image = conjugate(v, s);
      if (commutes(s, q)) {
        EXPECT_EQ(image, s);
      } else {
        auto [product, k] = mul(s, q);
        ASSERT_EQ((k + 1) % 2, 0);
        PauliProduct expected = product;
        expected.set_negative((k + 1) % 4 == 2);
        EXPECT_EQ(image, expected);
      }
      DenseUnitary dense = vd * pauli_matrix(s) * vd.adjoint();
      ASSERT_LT((dense - pauli_matrix(image)).norm(), 1e-9) << q.str() << " " << s.str();
    }
  }
}

TEST(tableau, diagonalize_examples) {
  PauliProduct z[] = {P("Z")};
  EXPECT_TRUE(diagonalize_commuting_set(z).tableau.is_identity());

  PauliProduct x[] = {P("X")};
  EXPECT_EQ(diagonalize_commuting_set(x).tableau, single_gate(1, GateKind::H, {0}));

  PauliProduct pair[] = {P("ZZ"), P("XX")};
  auto d = diagonalize_commuting_set(pair);
  EXPECT_EQ(conjugate(d.tableau, pair[0]), P("ZI"));
  EXPECT_EQ(conjugate(d.tableau, pair[1]), P("IZ"));

  PauliProduct negative[] = {P("-XY"), P("ZZ")};
  auto dn = diagonalize_commuting_set(negative);
  EXPECT_EQ(conjugate(dn.tableau, negative[0]), P("ZI"));
  EXPECT_EQ(conjugate(dn.tableau, negative[1]), P("IZ"));
}

TEST(tableau, diagonalize_rejects_bad_sets) {
  PauliProduct anti[] = {P("ZI"), P("XI")};
  EXPECT_THROW(diagonalize_commuting_set(anti), std::invalid_argument);
  PauliProduct dependent[] = {P("ZI"), P("IZ"), P("-ZZ")};
  EXPECT_THROW(diagonalize_commuting_set(dependent), DependentSetError);
  EXPECT_FALSE(is_independent(dependent));
  PauliProduct too_many[] = {P("Z"), P("-Z")};
  EXPECT_THROW(diagonalize_commuting_set(too_many), DependentSetError);
}

TEST(tableau, diagonalize_random_commuting_sets) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 6;
    std::size_t m = 1 + rng() % n;
    auto c = CliffordTableau::from_circuit(random_clifford_circuit(rng, n, 40));
    std::vector<PauliProduct> set;
    for (std::size_t j = 0; j < m; ++j) {
      PauliProduct p = conjugate(c, PauliProduct::single(n, j, 'Z'));
      if (rng() & 1) p = -p;
      set.push_back(p);
    }
    ASSERT_TRUE(is_independent(set));
    auto d = diagonalize_commuting_set(set);
    CliffordTableau from_gates(n);
    for (const Gate &g : d.gates) from_gates.apply(g);
    EXPECT_EQ(from_gates, d.tableau);
    for (std::size_t j = 0; j < m; ++j) {
      EXPECT_EQ(conjugate(d.tableau, set[j]), PauliProduct::single(n, j, 'Z'));
    }
  }
}

TEST(tableau, synthesize_examples) {
  EXPECT_TRUE(synthesize(CliffordTableau(3)).empty());
  auto h = single_gate(1, GateKind::H, {0});
  EXPECT_EQ(CliffordTableau::from_circuit(synthesize(h)), h);
}

TEST(tableau, synthesize_round_trips_random_tableaux) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 7;
    auto t = CliffordTableau::from_circuit(random_clifford_circuit(rng, n, 10 + trial % 50));
    Circuit c = synthesize(t);
    for (const Gate &g : c.gates()) {
      ASSERT_TRUE(g.kind == GateKind::H || g.kind == GateKind::S || g.kind == GateKind::CNOT ||
                  g.kind == GateKind::X || g.kind == GateKind::Z);
    }
    ASSERT_EQ(CliffordTableau::from_circuit(c), t);
  }
}

TEST(tableau, from_rows_validates) {
  EXPECT_THROW(CliffordTableau::from_rows({P("X")}, {P("X")}), std::invalid_argument);
  EXPECT_NO_THROW(CliffordTableau::from_rows({P("Z")}, {P("-X")}));
}
