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

#include "trot/optimizer.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <numbers>

#include "test_support.h"
#include "trot/verify.h"

using namespace trot;
using namespace trot::testing;

namespace {

std::vector<Gate> non_phase_gates(const Circuit &c) {
  std::vector<Gate> out;
  for (const Gate &g : c.gates()) {
    if (g.kind != GateKind::T && g.kind != GateKind::Tdg && g.kind != GateKind::S &&
        g.kind != GateKind::Sdg) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TEST(optimizer, merge_two_equal_rotations) {
  OptimizeResult r = optimize(form_from({"Z", "Z"}));
  EXPECT_TRUE(r.form.rotations.empty());
  EXPECT_EQ(r.plan.at(0), EditAction::kReplaceWithS);
  EXPECT_EQ(r.plan.at(1), EditAction::kDelete);
  EXPECT_EQ(r.stats.merges, 1u);
  EXPECT_EQ(r.stats.cancellations, 0u);
}

TEST(optimizer, cancel_opposite_rotations) {
  OptimizeResult r = optimize(form_from({"XZ", "-XZ"}));
  EXPECT_TRUE(r.form.rotations.empty());
  EXPECT_EQ(r.plan.at(0), EditAction::kDelete);
  EXPECT_EQ(r.plan.at(1), EditAction::kDelete);
  EXPECT_EQ(r.stats.cancellations, 1u);
  EXPECT_TRUE(r.form.tail.is_identity());
}

TEST(optimizer, anticommuting_rotation_blocks_scan) {
  OptimizeResult r = optimize(form_from({"Z", "X", "-Z"}));
  EXPECT_EQ(r.form.rotations.size(), 3u);
  EXPECT_TRUE(r.plan.actions.empty() ||
              r.plan.count(EditAction::kDelete) + r.plan.count(EditAction::kReplaceWithS) == 0);
}

TEST(optimizer, scan_passes_commuting_rotations) {
  OptimizeResult r = optimize(form_from({"ZI", "IZ", "XX", "-ZI"}));
  // XX anticommutes with ZI, so it blocks.
  EXPECT_EQ(r.form.rotations.size(), 4u);
  OptimizeResult s = optimize(form_from({"ZI", "IZ", "ZZ", "-ZI"}));
  EXPECT_EQ(s.form.rotations.size(), 2u);
  EXPECT_EQ(s.plan.at(0), EditAction::kDelete);
  EXPECT_EQ(s.plan.at(3), EditAction::kDelete);
}

TEST(optimizer, optimized_form_is_equivalent) {
  for (auto labels : std::vector<std::vector<std::string>>{
           {"Z", "Z"}, {"Z", "X", "Z", "X"}, {"ZZ", "XI", "ZZ", "IX", "XX", "YI"},
           {"XY", "XY", "ZI", "XY", "YZ", "-XY"}}) {
    RotationForm f = form_from(labels);
    OptimizeResult r = optimize(f);
    EXPECT_TRUE(equivalent_up_to_phase(unitary_of(r.form), unitary_of(f)));
  }
}

TEST(optimizer, t_x_t_x_cancels) {
  Circuit c(1);
  c.append(GateKind::T, {0});
  c.append(GateKind::X, {0});
  c.append(GateKind::T, {0});
  c.append(GateKind::X, {0});
  OptimizeResult details;
  Circuit out = optimize_circuit(c, OutputMode::kInPlace, &details);
  EXPECT_EQ(details.plan.at(0), EditAction::kDelete);
  EXPECT_EQ(details.plan.at(2), EditAction::kDelete);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.gates()[0].kind, GateKind::X);
  EXPECT_EQ(out.gates()[1].kind, GateKind::X);
  DenseUnitary u = unitary_of(c);
  std::complex<double> lambda = std::polar(1.0, std::numbers::pi / 4);
  EXPECT_LT((u - lambda * unitary_of(out)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(optimizer, cz_in_disguise_merges) {
  Circuit c(2);
  c.append(GateKind::T, {0});
  c.append(GateKind::H, {1});
  c.append(GateKind::CNOT, {0, 1});
  c.append(GateKind::H, {1});
  c.append(GateKind::T, {0});
  for (OutputMode mode : {OutputMode::kInPlace, OutputMode::kResynth}) {
    Circuit out = optimize_circuit(c, mode);
    EXPECT_EQ(counts(out).t_count, 0u);
    EXPECT_TRUE(equivalent_up_to_phase(unitary_of(out), unitary_of(c)));
  }
}

TEST(optimizer, disguised_cz_gives_same_rotations) {
  Circuit native(2), disguised(2);
  for (Circuit *c : {&native, &disguised}) {
    c->append(GateKind::T, {1});
    c->append(GateKind::H, {0});
    c->append(GateKind::T, {0});
  }
  native.append(GateKind::CZ, {0, 1});
  disguised.append(GateKind::H, {1});
  disguised.append(GateKind::CNOT, {0, 1});
  disguised.append(GateKind::H, {1});
  for (Circuit *c : {&native, &disguised}) {
    c->append(GateKind::T, {0});
    c->append(GateKind::Tdg, {1});
  }
  EXPECT_EQ(paulis_of(to_rotation_form(native).rotations),
            paulis_of(to_rotation_form(disguised).rotations));
}

TEST(optimizer, frame_after_merge_matches_oracle) {
  // After merging on Z, an X rotation arrives conjugated by the S correction.
  RotationForm f = form_from({"Z", "Z", "X", "X"});
  OptimizeResult r = optimize(f);
  EXPECT_EQ(r.stats.merges, 2u);
  EXPECT_TRUE(r.form.rotations.empty());
  EXPECT_TRUE(equivalent_up_to_phase(unitary_of(r.form), unitary_of(f)));

  // R(X) S = S R(-Y): the X rotation is carried through the S correction.
  RotationForm h = form_from({"Z", "Z", "X"});
  OptimizeResult t = optimize(h);
  ASSERT_EQ(t.form.rotations.size(), 1u);
  EXPECT_EQ(t.form.rotations[0].pauli, PauliProduct::from_str("-Y"));
  EXPECT_EQ(t.form.rotations[0].origin, 2u);
  EXPECT_TRUE(equivalent_up_to_phase(unitary_of(t.form), unitary_of(h)));

  RotationForm g = form_from({"ZI", "ZI", "XZ", "-YZ", "XZ"});
  OptimizeResult s = optimize(g);
  EXPECT_EQ(s.stats.merges, 1u);
  EXPECT_EQ(s.form.rotations.size(), 3u);
  EXPECT_TRUE(equivalent_up_to_phase(unitary_of(s.form), unitary_of(g)));
}

TEST(optimizer, mod5_reaches_eight) {
  Circuit c = expand(read_qc_file(data_path("mod5_4.qc")));
  OptimizeResult details;
  Circuit out = optimize_circuit(c, OutputMode::kInPlace, &details);
  EXPECT_EQ(counts(out).t_count, 8u);
  EXPECT_EQ(counts(out).cnot_count, 28u);
  EXPECT_EQ(counts(out).h_count, counts(c).h_count);
  EXPECT_EQ(details.form.rotations.size(), 8u);
  EXPECT_EQ(non_phase_gates(out), non_phase_gates(c));
  EXPECT_TRUE(equivalent_up_to_phase(unitary_of(out), unitary_of(c)));
  auto reduction = t_count_reduction(c, out);
  EXPECT_EQ(reduction.t_before, 28u);
  EXPECT_EQ(reduction.t_after, 8u);
  EXPECT_NEAR(reduction.percent, 71.43, 0.005);
}

TEST(optimizer, t_count_reduction_edges) {
  Circuit none(1);
  none.append(GateKind::H, {0});
  EXPECT_EQ(t_count_reduction(none, none).percent, 0.0);
  Circuit tt(1);
  tt.append(GateKind::T, {0});
  tt.append(GateKind::T, {0});
  EXPECT_EQ(t_count_reduction(tt, optimize_circuit(tt)).percent, 100.0);
  Circuit zx(1);
  zx.append(GateKind::T, {0});
  zx.append(GateKind::H, {0});
  zx.append(GateKind::T, {0});
  EXPECT_EQ(t_count_reduction(zx, optimize_circuit(zx)).percent, 0.0);
}

TEST(optimizer, random_circuits_are_sound_and_keep_non_phase_gates) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    Circuit c = expand(random_clifford_t_circuit(rng, 1 + trial % 6, 60));
    OptimizeResult details;
    Circuit in_place = optimize_circuit(c, OutputMode::kInPlace, &details);
    Circuit resynth = optimize_circuit(c, OutputMode::kResynth);
    std::size_t before = counts(c).t_count;
    std::size_t after = counts(in_place).t_count;
    ASSERT_LE(after, before);
    ASSERT_EQ((before - after) % 2, 0u);
    ASSERT_EQ(counts(resynth).t_count, after);
    ASSERT_EQ(non_phase_gates(in_place), non_phase_gates(c));
    DenseUnitary u = unitary_of(c);
    ASSERT_TRUE(equivalent_up_to_phase(unitary_of(in_place), u)) << write_qc(c);
    ASSERT_TRUE(equivalent_up_to_phase(unitary_of(resynth), u)) << write_qc(c);
    ASSERT_TRUE(equivalent_up_to_phase(unitary_of(details.form), u));
  }
}

TEST(optimizer, second_pass_is_quiescent) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    Circuit c = expand(random_clifford_t_circuit(rng, 1 + trial % 6, 60));
    Circuit once = optimize_circuit(c);
    OptimizeResult again;
    optimize_circuit(once, OutputMode::kInPlace, &again);
    EXPECT_EQ(again.stats.merges + again.stats.cancellations, 0u) << write_qc(c);
  }
  Circuit mod5 = optimize_circuit(expand(read_qc_file(data_path("mod5_4.qc"))));
  OptimizeResult again;
  optimize_circuit(mod5, OutputMode::kInPlace, &again);
  EXPECT_EQ(again.stats.merges + again.stats.cancellations, 0u);
}

TEST(optimizer, comparisons_bounded_by_k_squared) {
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 64; ++j) {
    std::string s(8, 'I');
    for (std::size_t q = 0; q < 6; ++q) {
      if ((j >> q) & 1) s[q] = 'Z';
    }
    s[6] = 'Z';
    labels.push_back(s);
  }
  OptimizeResult r = optimize(form_from(labels));
  EXPECT_EQ(r.form.rotations.size(), 64u);
  EXPECT_EQ(r.stats.comparisons, 64u * 63u / 2u);
}
