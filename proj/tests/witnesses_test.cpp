#include "lsg/witnesses.hpp"

#include "gtest/gtest.h"
#include "lsg/solvers.hpp"

namespace lsg {
namespace {

struct Instance {
  LabeledGraph g;
  DistanceMatrix d;
};

Instance make(LayerSunParams p, Variant v) {
  auto g = build_family(p, v);
  auto d = all_pairs_distances(g.graph());
  return {std::move(g), std::move(d)};
}

TEST(Witnesses, SizesFollowClosedForms) {
  auto [g, d] = make({3, 3, 4}, Variant::base);
  EXPECT_EQ(beta_witness(g).size(), 18u);
  EXPECT_EQ(beta_counterexample_missing_component(g).size(), 24u);
  EXPECT_EQ(beta_counterexample_two_missing(g).size(), 25u);
  EXPECT_EQ(psi_witness(g).size(), 27u);
  EXPECT_EQ(psi_counterexample(g).size(), 26u);
  EXPECT_EQ(sdim_witness(g).size(), 26u);
  auto h = build_line_layer_sun({3, 3, 4});
  EXPECT_EQ(line_psi_witness(h).size(), 18u);
  EXPECT_EQ(line_sdim_witness(h).size(), 26u);
}

TEST(Witnesses, FlagshipInstance) {
  auto [g, d] = make({3, 3, 4}, Variant::base);
  EXPECT_TRUE(is_resolving_set(d, beta_witness(g)).passed);
  EXPECT_FALSE(is_resolving_set(d, beta_counterexample_missing_component(g)).passed);
  EXPECT_FALSE(is_resolving_set(d, beta_counterexample_two_missing(g)).passed);
  EXPECT_TRUE(is_doubly_resolving_set(d, psi_witness(g)).passed);
  EXPECT_TRUE(is_resolving_set(d, psi_counterexample(g)).passed);
  EXPECT_FALSE(is_doubly_resolving_set(d, psi_counterexample(g)).passed);
  EXPECT_TRUE(is_strong_resolving_set(d, sdim_witness(g)).passed);
  EXPECT_EQ(twin_lower_bound(twin_partition(d)), 18u);
}

TEST(Witnesses, CounterexampleViolationsAreInTheDroppedComponent) {
  auto [g, d] = make({3, 3, 4}, Variant::base);
  auto r = is_resolving_set(d, beta_counterexample_two_missing(g));
  ASSERT_TRUE(r.violation.has_value());
  auto [u, v] = *r.violation;
  EXPECT_EQ(component_of(g, u), std::make_pair(1, 1));
  EXPECT_EQ(component_of(g, v), std::make_pair(1, 1));
}

TEST(Witnesses, SubsetRelations) {
  auto [g, d] = make({4, 2, 4}, Variant::base);
  auto psi = psi_witness(g);
  for (const auto& w : {beta_witness(g), beta_counterexample_missing_component(g),
                        beta_counterexample_two_missing(g), psi_counterexample(g),
                        sdim_witness(g)})
    EXPECT_TRUE(w.is_subset_of(psi));
  EXPECT_TRUE(beta_witness(g).is_subset_of(sdim_witness(g)));
  EXPECT_EQ(psi_counterexample(g), sdim_witness(g));
  for (Vertex v : psi) EXPECT_EQ(g.label_of(v).layer, 4);
}

TEST(Witnesses, AnyDroppedSlotGivesAMetricBasis) {
  auto [g, d] = make({3, 3, 4}, Variant::base);
  for (int slot = 1; slot <= 3; ++slot) {
    auto w = beta_witness(g, slot);
    EXPECT_EQ(w.size(), 18u);
    EXPECT_TRUE(is_resolving_set(d, w).passed) << slot;
  }
  EXPECT_NE(beta_witness(g, 1), beta_witness(g, 2));
}

TEST(Witnesses, CatalogOutcomesOnSmallGrid) {
  for (int n = 3; n <= 4; ++n)
    for (int m = 2; m <= 3; ++m)
      for (int k = 3; k <= 4; ++k) {
        auto [g, d] = make({n, m, k}, Variant::base);
        auto outcomes = check_witnesses(g, d);
        EXPECT_EQ(outcomes.size(), 7u);
        for (const auto& o : outcomes) EXPECT_TRUE(o.ok()) << o.name << " " << to_string(o.kind);
      }
}

TEST(Witnesses, LinePsiWitnessResolvesAndDoublyResolves) {
  for (LayerSunParams p : {LayerSunParams{3, 2, 3}, {3, 3, 4}, {5, 2, 4}}) {
    auto [h, d] = make(p, Variant::line);
    auto w = line_psi_witness(h);
    EXPECT_EQ(w.size(), formulas(p, Variant::line).psi);
    EXPECT_TRUE(is_resolving_set(d, w).passed);
    EXPECT_TRUE(is_doubly_resolving_set(d, w).passed);
  }
}

// The strong resolving set claimed for the line variant leaves pairs
// unresolved. In H(3,2,3), two vertices at the far ends of different
// branches are mutually maximally distant, so a strong resolving set must
// contain one of them; dropping a single leaf cannot cover all such pairs.
TEST(Witnesses, LineSdimWitnessIsNotStrongResolving) {
  for (LayerSunParams p : {LayerSunParams{3, 2, 3}, {4, 2, 3}, {3, 3, 4}}) {
    auto [h, d] = make(p, Variant::line);
    auto w = line_sdim_witness(h);
    EXPECT_EQ(w.size(), formulas(p, Variant::line).sdim);
    auto r = is_strong_resolving_set(d, w);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.violation.has_value());
    auto [u, v] = *r.violation;
    for (Vertex x : w) EXPECT_FALSE(strongly_resolves(d, x, u, v));
  }
}

TEST(Witnesses, VariantMismatch) {
  auto h = build_line_layer_sun({3, 2, 3});
  auto g = build_layer_sun({3, 2, 3});
  try {
    beta_witness(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VariantMismatch);
  }
  EXPECT_THROW(psi_witness(h), Error);
  EXPECT_THROW(sdim_witness(h), Error);
  EXPECT_THROW(line_psi_witness(g), Error);
  EXPECT_THROW(line_sdim_witness(g), Error);
}

TEST(WitnessCatalog, ClosedListOfNames) {
  std::vector<std::string> names;
  for (const auto& w : witness_catalog()) names.emplace_back(w.name);
  EXPECT_EQ(names, (std::vector<std::string>{"beta", "beta-missing-component", "beta-two-missing",
                                             "psi", "psi-counterexample", "sdim", "line-psi",
                                             "line-sdim"}));
  EXPECT_EQ(find_witness("psi").variant, Variant::base);
  try {
    find_witness("gamma");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownWitness);
  }
}

}  // namespace
}  // namespace lsg
