// Copyright 2026 The qsw Authors.
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

#include "qsw/nsbox.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"

namespace qsw {
namespace {

TEST(FromTable, deterministic_box_has_unit_parameters) {
  const NSBox box = local_vertex(0, 0, 0, 0);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < 2; ++j) EXPECT_EQ(box.c(k, j), 1.0);
    EXPECT_EQ(box.m(k), 1.0);
    EXPECT_EQ(box.n(k), 1.0);
  }
}

TEST(FromTable, uniform_noise) {
  FullTable table;
  table.p.fill(0.25);
  const NSBox box = from_table(table);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < 2; ++j) EXPECT_EQ(box.c(k, j), 0.25);
    EXPECT_EQ(box.m(k), 0.5);
    EXPECT_EQ(box.n(k), 0.5);
  }
}

TEST(FromTable, canonical_pr_box) {
  const NSBox box = pr_vertex(0, 0, 0);
  EXPECT_EQ(box.c(0, 0), 0.5);
  EXPECT_EQ(box.c(0, 1), 0.5);
  EXPECT_EQ(box.c(1, 0), 0.5);
  EXPECT_EQ(box.c(1, 1), 0.0);
  EXPECT_EQ(box.m(0), 0.5);
  EXPECT_EQ(box.m(1), 0.5);
  EXPECT_EQ(box.n(0), 0.5);
  EXPECT_EQ(box.n(1), 0.5);
}

TEST(FromTable, rejects_negative_entries) {
  FullTable table;
  table.p.fill(0.25);
  table.at(0, 0, 0, 0) = -0.1;
  table.at(0, 0, 0, 1) = 0.6;
  EXPECT_THROW(from_table(table), InvalidDistribution);
}

TEST(FromTable, rejects_unnormalized_rows) {
  FullTable table;
  table.p.fill(0.3);
  EXPECT_THROW(from_table(table), InvalidDistribution);
}

TEST(FromTable, rejects_signaling_tables) {
  // Alice's marginal for outcome +1 flips with Bob's input.
  FullTable table;
  for (int x_a = 0; x_a < 2; ++x_a) {
    table.at(x_a, 0, 0, 0) = 1.0;  // x_B = 0: Alice outputs +1
    table.at(x_a, 1, 1, 0) = 1.0;  // x_B = 1: Alice outputs -1
  }
  try {
    from_table(table);
    FAIL() << "expected NotNoSignaling";
  } catch (const NotNoSignaling& e) {
    EXPECT_NEAR(e.worst_violation(), 1.0, 1e-12);
  }
}

TEST(NSBoxCtor, rejects_parameters_with_negative_entries) {
  // m0 < c00 makes the (+,-) entry negative.
  EXPECT_THROW(NSBox(0.5, 0.5, 0.5, 0.5, 0.2, 0.5, 0.5, 0.5),
               InvalidDistribution);
}

TEST(RoundTrip, table_to_box_to_table_is_exact) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const NSBox box = oracles::random_polytope_box(rng);
    EXPECT_TRUE(from_table(to_table(box)) == box);
  }
  // The 1-ulp stress case for subtract-then-re-add extraction.
  const NSBox awkward(0.2, 0.2, 0.2, 0.2, 0.7000000000000001, 0.7, 0.5, 0.5);
  EXPECT_TRUE(from_table(to_table(awkward)) == awkward);
}

TEST(Vertices, all_distinct_and_valid) {
  std::set<std::array<double, 16>> seen;
  for (const NSBox& v : local_vertices()) {
    std::array<double, 16> key;
    std::copy(v.table().p.begin(), v.table().p.end(), key.begin());
    seen.insert(key);
  }
  EXPECT_EQ(seen.size(), 16u);
  for (const NSBox& v : pr_vertices()) {
    std::array<double, 16> key;
    std::copy(v.table().p.begin(), v.table().p.end(), key.begin());
    seen.insert(key);
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Vertices, deterministic_outputs) {
  const NSBox plus = local_vertex(0, 0, 0, 0);
  const NSBox minus = local_vertex(0, 1, 0, 1);
  for (int x_a = 0; x_a < 2; ++x_a) {
    for (int x_b = 0; x_b < 2; ++x_b) {
      EXPECT_EQ(plus.table().at(x_a, x_b, 0, 0), 1.0);
      EXPECT_EQ(minus.table().at(x_a, x_b, 1, 1), 1.0);
    }
  }
  EXPECT_THROW(local_vertex(2, 0, 0, 0), DomainError);
  EXPECT_THROW(pr_vertex(0, -1, 0), DomainError);
}

TEST(Correlator, reference_values) {
  EXPECT_EQ(correlator(pr_vertex(0, 0, 0), 1, 1), -1.0);
  EXPECT_EQ(correlator(pr_vertex(0, 0, 0), 0, 1), 1.0);
  FullTable table;
  table.p.fill(0.25);
  const NSBox noise = from_table(table);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) EXPECT_EQ(correlator(noise, x, y), 0.0);
  }
  EXPECT_EQ(correlator(local_vertex(0, 0, 0, 0), 0, 0), 1.0);
  EXPECT_THROW(correlator(noise, 2, 0), DomainError);
}

TEST(ChshValue, vertices) {
  EXPECT_EQ(chsh_value(pr_vertex(0, 0, 0)), 4.0);
  EXPECT_EQ(chsh_value(pr_vertex(0, 0, 1)), -4.0);
  for (const NSBox& v : local_vertices()) {
    EXPECT_NEAR(std::abs(chsh_value(v)), 2.0, 1e-12);
  }
  FullTable table;
  table.p.fill(0.25);
  EXPECT_EQ(chsh_value(from_table(table)), 0.0);
}

TEST(ChshValue, correlator_route_equals_canonical_route) {
  std::mt19937_64 rng(777);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const NSBox box = oracles::random_polytope_box(rng);
    worst = std::max(worst,
                     std::abs(chsh_value(box) - chsh_value_canonical(box)));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(TiltedChsh, reduces_to_chsh_at_zero_tilt) {
  EXPECT_EQ(tilted_chsh_value(pr_vertex(0, 0, 0), 0.0), 4.0);
}

TEST(TiltedChsh, deterministic_box_value) {
  // B = 2 and m0 = 1, so the value is 2 + 2 zeta; approaches 6 as zeta -> 2.
  const NSBox box = local_vertex(0, 0, 0, 0);
  EXPECT_NEAR(tilted_chsh_value(box, 1.5), 5.0, 1e-12);
  EXPECT_NEAR(tilted_chsh_value(box, 1.999999), 5.999998, 1e-9);
}

TEST(TiltedChsh, local_bound_is_two_plus_two_zeta) {
  for (double zeta = 0.0; zeta < 2.0; zeta += 0.05) {
    double best = -1e300;
    for (const NSBox& v : local_vertices()) {
      best = std::max(best, tilted_chsh_value(v, zeta));
    }
    EXPECT_NEAR(best, 2.0 + 2.0 * zeta, 1e-12) << "zeta=" << zeta;
  }
}

TEST(TiltedChsh, rejects_out_of_range_tilt) {
  const NSBox box = local_vertex(0, 0, 0, 0);
  EXPECT_THROW(tilted_chsh_value(box, 2.0), DomainError);
  EXPECT_THROW(tilted_chsh_value(box, -0.1), DomainError);
}

TEST(AffineBell, identity_and_domain) {
  EXPECT_EQ(affine_bell(2.0, 1.0, 0.0), 2.0);
  EXPECT_EQ(affine_bell(2.0, 3.0, -1.0), 5.0);
  EXPECT_THROW(affine_bell(2.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(affine_bell(2.0, -1.0, 1.0), DomainError);
}

TEST(AffineBell, argmax_matches_raw_argmax) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> k1_dist(0.1, 4.0);
  std::uniform_real_distribution<double> k2_dist(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<NSBox> boxes;
    for (int i = 0; i < 8; ++i) {
      boxes.push_back(oracles::random_polytope_box(rng));
    }
    const double k1 = k1_dist(rng), k2 = k2_dist(rng);
    size_t raw = 0, affine = 0;
    for (size_t i = 1; i < boxes.size(); ++i) {
      if (chsh_value(boxes[i]) > chsh_value(boxes[raw])) raw = i;
      if (affine_bell(chsh_value(boxes[i]), k1, k2) >
          affine_bell(chsh_value(boxes[affine]), k1, k2)) {
        affine = i;
      }
    }
    EXPECT_EQ(raw, affine);
  }
}

TEST(IsLocal, separates_the_polytope_vertices) {
  for (const NSBox& v : local_vertices()) EXPECT_TRUE(is_local(v));
  for (const NSBox& v : pr_vertices()) EXPECT_FALSE(is_local(v));
}

TEST(IsLocal, chsh_facet_point_is_local) {
  // Half PR plus half uniform noise sits exactly on the CHSH facet.
  FullTable table;
  table.p.fill(0.25);
  const std::vector<NSBox> parts = {pr_vertex(0, 0, 0), from_table(table)};
  const std::vector<double> weights = {0.5, 0.5};
  const NSBox facet = mix(parts, weights);
  EXPECT_NEAR(chsh_value(facet), 2.0, 1e-12);
  EXPECT_TRUE(is_local(facet));
}

TEST(IsLocal, slightly_superlocal_mixture_is_not_local) {
  FullTable table;
  table.p.fill(0.25);
  const std::vector<NSBox> parts = {pr_vertex(0, 0, 0), from_table(table)};
  const std::vector<double> weights = {0.51, 0.49};
  const NSBox beyond = mix(parts, weights);
  EXPECT_GT(chsh_value(beyond), 2.0);
  EXPECT_FALSE(is_local(beyond));
}

TEST(Mix, singleton_is_identity) {
  const std::vector<NSBox> one = {pr_vertex(1, 0, 1)};
  const std::vector<double> weight = {1.0};
  EXPECT_TRUE(mix(one, weight) == one[0]);
}

TEST(Mix, uniform_over_locals_gives_noise) {
  const std::vector<NSBox> locals(local_vertices().begin(),
                                  local_vertices().end());
  const std::vector<double> weights(16, 1.0 / 16.0);
  const NSBox box = mix(locals, weights);
  for (double v : to_table(box).p) EXPECT_NEAR(v, 0.25, 1e-12);
}

TEST(Mix, random_vertex_mixtures_are_valid_boxes) {
  std::mt19937_64 rng(2024);
  const std::vector<NSBox> vertices = polytope_vertices();
  for (int trial = 0; trial < 300; ++trial) {
    const auto weights = oracles::dirichlet(rng, vertices.size());
    const NSBox box = mix(vertices, weights);  // ctor validates
    double total = 0.0;
    for (double v : to_table(box).p) {
      EXPECT_GE(v, -kBoxValidityTol);
      total += v;
    }
    EXPECT_NEAR(total, 4.0, 1e-9);
  }
}

TEST(Mix, rejects_bad_weights) {
  const std::vector<NSBox> two = {pr_vertex(0, 0, 0), pr_vertex(0, 0, 1)};
  const std::vector<double> short_weights = {1.0};
  EXPECT_THROW(mix(two, short_weights), DomainError);
  const std::vector<double> unnormalized = {0.7, 0.7};
  EXPECT_THROW(mix(two, unnormalized), DomainError);
  const std::vector<double> negative = {1.5, -0.5};
  EXPECT_THROW(mix(two, negative), DomainError);
}

TEST(PrVertices, each_saturates_exactly_one_chsh_sign_variant) {
  for (const NSBox& v : pr_vertices()) {
    int hits = 0;
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        for (int r = 0; r < 2; ++r) {
          double value = 0.0;
          for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
              const int sign = (x * y + p * x + q * y + r) % 2;
              value += (sign == 0 ? 1.0 : -1.0) * correlator(v, x, y);
            }
          }
          if (std::abs(value - 4.0) <= 1e-12) ++hits;
        }
      }
    }
    EXPECT_EQ(hits, 1);
  }
}

}  // namespace
}  // namespace qsw
