// Copyright 2026 The phasekit Authors
// SPDX-License-Identifier: Apache-2.0

#include "phasekit/fock_rep.hpp"
#include "phasekit/mub.hpp"
#include "phasekit/phase_operators.hpp"
#include "phasekit/phase_states.hpp"
#include "phasekit/serialize.hpp"
#include "phasekit/truncated.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace phasekit;

namespace {

Json reparse(const Json& j) { return parse_json(j.dump()); }

}  // namespace

TEST(Serialize, OperatorRoundTripIsBitExact) {
  const KappaSpec s = KappaSpec::negative(3, 0.77);
  const SpacePtr sp = build_space(s);
  const LinearOperator a = ladder(s, sp, Mode::Two, Sign::Plus);
  const LinearOperator back = linear_operator_from_json(reparse(to_json(a)));
  EXPECT_EQ(back.label, a.label);
  EXPECT_EQ(back.space->dim(), sp->dim());
  EXPECT_EQ(max_abs(back.matrix - a.matrix), 0.0);
}

TEST(Serialize, WindowKindSurvives) {
  const KappaSpec s = KappaSpec::non_negative(0.5, 3);
  const Window w = make_window(s);
  const LinearOperator b = build_truncated_ladders(s, w)[0];
  const Json j = to_json(b);
  EXPECT_EQ(j.at("kind"), "window");
  const LinearOperator back = linear_operator_from_json(reparse(j));
  EXPECT_EQ(back.space->kind(), ShellKind::Window);
  EXPECT_EQ(max_abs(back.matrix - b.matrix), 0.0);
}

TEST(Serialize, StateAndFamilies) {
  const KappaSpec s = KappaSpec::negative(2, 0.4);
  const SpacePtr sp = build_space(s);
  const StateVector st = phase_state(s, sp, PhaseFamily::E3d, 2, 1, 0.4);
  EXPECT_EQ(max_abs(state_vector_from_json(reparse(to_json(st))).amps - st.amps), 0.0);

  const PhaseStateFamily fam = phase_states(s, sp, PhaseFamily::E1d, 1, 0.4);
  const PhaseStateFamily fb = phase_state_family_from_json(reparse(to_json(fam)));
  EXPECT_EQ(fb.family, PhaseFamily::E1d);
  EXPECT_EQ(fb.l, fam.l);
  ASSERT_EQ(fb.states.size(), fam.states.size());
  for (std::size_t i = 0; i < fam.states.size(); ++i) EXPECT_EQ(max_abs(fb.states[i].amps - fam.states[i].amps), 0.0);

  const VectorPhaseState v = vector_phase_states(s, sp, PhaseFamily::E2d, 1, 0.4)[1];
  const VectorPhaseState vb = vector_phase_state_from_json(reparse(to_json(v)));
  EXPECT_EQ(vb.l, v.l);
  EXPECT_EQ(vb.m, v.m);
  EXPECT_EQ(max_abs(stack(vb) - stack(v)), 0.0);
}

TEST(Serialize, PhaseOperatorWithBlocks) {
  const KappaSpec s = KappaSpec::negative(3, 1.2);
  const PhaseOperator p = build_E1d(s, build_space(s));
  const PhaseOperator back = phase_operator_from_json(reparse(to_json(p)));
  EXPECT_EQ(back.family, PhaseFamily::E1d);
  ASSERT_EQ(back.block_ops.size(), p.block_ops.size());
  EXPECT_EQ(max_abs(back.op.matrix - p.op.matrix), 0.0);
}

TEST(Serialize, MubSetAndCertificate) {
  const MubSet set = build_mub_set(4, MubRoute::E3);
  const MubSet back = mub_set_from_json(reparse(to_json(set)));
  EXPECT_EQ(back.N, 4);
  EXPECT_EQ(back.route, MubRoute::E3);
  EXPECT_EQ(back.certificate.failing_pairs, set.certificate.failing_pairs);
  EXPECT_EQ(back.certificate.max_deviation, set.certificate.max_deviation);
  ASSERT_EQ(back.bases.size(), set.bases.size());
  for (std::size_t i = 0; i < set.bases.size(); ++i) EXPECT_EQ(max_abs(back.bases[i].vectors - set.bases[i].vectors), 0.0);
  EXPECT_EQ((back.overlap_table - set.overlap_table).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Serialize, ReportRoundTripAndNonFinite) {
  VerificationReport r;
  r.add("ok", 1e-15, 1e-10);
  r.add_split("split", {0.0, 2.0}, 1e-10, "note");
  r.add("bad", std::numeric_limits<double>::infinity(), 1e-10);
  const Json j = to_json(r);
  EXPECT_TRUE(j.at("entries")[2].at("max_residual").is_null());
  const VerificationReport back = report_from_json(reparse(j));
  EXPECT_EQ(back.entries().size(), 3u);
  EXPECT_FALSE(back.overall());
  EXPECT_TRUE(back.at("split").pass);
  EXPECT_EQ(back.at("split").note, "note");
  EXPECT_FALSE(back.at("bad").pass);
}

TEST(Serialize, LengthMismatchNamesField) {
  const KappaSpec s = KappaSpec::negative(1);
  Json j = to_json(ladder(s, build_space(s), Mode::One, Sign::Minus));
  j["re"].erase(0);
  try {
    (void)linear_operator_from_json(j);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/re");
    EXPECT_NE(std::string(e.what()).find("length mismatch"), std::string::npos);
  }
}

TEST(Serialize, SchemaViolations) {
  const KappaSpec s = KappaSpec::negative(1);
  const Json good = to_json(ladder(s, build_space(s), Mode::One, Sign::Minus));
  Json missing = good;
  missing.erase("im");
  EXPECT_THROW((void)linear_operator_from_json(missing), SchemaError);
  Json dim = good;
  dim["dim"] = 4;
  EXPECT_THROW((void)linear_operator_from_json(dim), SchemaError);
  Json kind = good;
  kind["kind"] = "torus";
  EXPECT_THROW((void)linear_operator_from_json(kind), SchemaError);
  Json elem = good;
  elem["re"][0] = "x";
  try {
    (void)linear_operator_from_json(elem);
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/re/0");
  }
  EXPECT_THROW((void)parse_json("{not json"), SchemaError);
  Json rep = to_json(VerificationReport{});
  rep["overall"] = false;
  EXPECT_THROW((void)report_from_json(rep), SchemaError);
}
