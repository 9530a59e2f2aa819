#include "nrgraph/limits.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nrgraph {
namespace {

TEST(NuBetaTest, Values) {
  EXPECT_DOUBLE_EQ(nu_beta(1.0, kInfinity, 3.0), 1.0);
  EXPECT_DOUBLE_EQ(nu_beta(1.0, 2.0, 3.0), 0.875);
  EXPECT_NEAR(nu_beta(0.5, 1.5, 2.5), std::pow(0.5, -2.5) - std::pow(1.5, -2.5), 1e-14);
  EXPECT_THROW(nu_beta(0.0, 1.0, 3.0), std::invalid_argument);
  EXPECT_THROW(nu_beta(2.0, 1.0, 3.0), std::invalid_argument);
}

TEST(NuBetaTest, Additive) {
  for (double beta : {2.5, 3.0, 4.0})
    for (double a : {0.3, 1.0, 2.0}) {
      const double b = 1.7 * a;
      const double c = 3.1 * a;
      EXPECT_NEAR(nu_beta(a, b, beta) + nu_beta(b, c, beta), nu_beta(a, c, beta), 1e-13);
      EXPECT_NEAR(nu_beta(a, b, beta) + nu_beta(b, kInfinity, beta), nu_beta(a, kInfinity, beta), 1e-13);
    }
}

TEST(FrechetTest, Values) {
  EXPECT_NEAR(frechet_cdf(1.0, 3.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(frechet_cdf(2.0, 3.0), 0.88249690258459546, 1e-15);
  EXPECT_EQ(frechet_cdf(0.0, 3.0), 0.0);
  EXPECT_EQ(frechet_cdf(-1.0, 3.0), 0.0);
}

TEST(FrechetTest, VoidProbabilityOfPoissonProcess) {
  // P(no point above x) = exp(-nu((x, inf])).
  for (double beta : {2.5, 3.0, 4.0})
    for (double x : {0.2, 0.7, 1.0, 3.0})
      EXPECT_NEAR(std::exp(-nu_beta(x, kInfinity, beta)), frechet_cdf(x, beta), 1e-15);
}

TEST(XiTest, ReferenceModel) {
  const auto model = WeightModel::pareto(3.0, 0.25);
  EXPECT_NEAR(xi(model, StatisticSpec::all_vertices()), 2.0, 1e-14);
  EXPECT_NEAR(xi(model, StatisticSpec::distance(1)), 1.0, 1e-15);
  EXPECT_NEAR(xi(model, StatisticSpec::distance(2)), 0.5, 1e-15);
  EXPECT_NEAR(xi(model, StatisticSpec::distance(3)), 0.25, 1e-15);
  EXPECT_THROW(xi(model, StatisticSpec::distance(0)), std::invalid_argument);
}

TEST(XiTest, SingleVertexTreeEqualsDegreeOne) {
  for (auto [beta, t] : {std::pair{3.0, 0.25}, std::pair{2.5, 0.2}, std::pair{4.0, 0.3}}) {
    const auto model = WeightModel::pareto(beta, t);
    const double tree = xi(model, StatisticSpec::terminal_tree(RootedTree::single_vertex()));
    EXPECT_NEAR(tree, xi(model, StatisticSpec::degree(1)), 1e-12 * tree);
  }
}

TEST(XiTest, DistanceSeriesSumsToAllVertices) {
  const auto model = WeightModel::pareto(3.0, 0.25);
  double sum = 0.0;
  for (std::size_t m = 1; m <= 80; ++m) sum += xi(model, StatisticSpec::distance(m));
  EXPECT_NEAR(sum, xi(model, StatisticSpec::all_vertices()), 1e-12);
}

TEST(XiTest, DegreeSeriesSumsToAllVertices) {
  // Σ_m W^m e^{-W} / (m-1)! = W, so the degree classes partition the component.
  const auto model = WeightModel::pareto(4.0, 0.3);
  double sum = 0.0;
  for (std::size_t m = 1; m <= 120; ++m) sum += xi(model, StatisticSpec::degree(m));
  const double all = xi(model, StatisticSpec::all_vertices());
  EXPECT_NEAR(sum, all, 1e-5 * all);
}

TEST(XiTest, TreeFormulaByHand) {
  const auto model = WeightModel::pareto(3.0, 0.25);
  const double gap = model.moment(1) - model.moment(2);
  // Cherry: root degree 2, two leaves of degree 1, c(T) = 2.
  const double cherry = model.exp_moment(3) / gap * std::pow(model.exp_moment(1) / model.moment(1), 2) / 2.0;
  EXPECT_NEAR(xi(model, StatisticSpec::parse("tree:0 1 1")), cherry, 1e-12 * cherry);
  // Path of three from the root: degrees 1, 2, 1 and no symmetry.
  const double path = model.exp_moment(2) / gap * model.exp_moment(2) / model.moment(1) * model.exp_moment(1) /
                      model.moment(1);
  EXPECT_NEAR(xi(model, StatisticSpec::parse("tree:0 1 2")), path, 1e-12 * path);
}

TEST(PointSetTest, IntervalsAndOrdering) {
  const PointSet points({0.5, 2.0, 0.0, 1.0, -3.0, 1.5, 7.0});
  EXPECT_EQ(points.size(), 5u);
  EXPECT_EQ(std::vector<double>(points.points().begin(), points.points().end()),
            (std::vector<double>{7.0, 2.0, 1.5, 1.0, 0.5}));
  EXPECT_EQ(points.interval_count(1.0, kInfinity), 3u);
  EXPECT_EQ(points.interval_count(1.0, 2.0), 2u);
  EXPECT_EQ(points.interval_count(0.0, 1.0), 2u);
  EXPECT_EQ(points.max_point(), 7.0);
  EXPECT_FALSE(PointSet().max_point().has_value());
  EXPECT_THROW(points.interval_count(2.0, 2.0), std::invalid_argument);
  EXPECT_THROW(points.interval_count(-1.0, 2.0), std::invalid_argument);
  EXPECT_EQ(points.scaled(2.0).interval_count(2.0, 4.0), 2u);
  std::ostringstream out;
  PointSet({1.0, 0.25}).write_csv(out);
  EXPECT_EQ(out.str(), "point\n1\n0.25\n");
}

TEST(ThetaTest, ExpectedExceedanceIsOne) {
  // n P(W > q(n)) = 1 exactly, so Theta_n((1, inf]) has mean 1.
  const auto model = WeightModel::pareto(3.0, 0.25);
  const std::size_t n = 1000;
  const int reps = 4000;
  Rng rng(31);
  double sum = 0.0;
  for (int r = 0; r < reps; ++r) {
    const auto w = sample_weights(model, n, rng);
    sum += static_cast<double>(build_theta_n(w, model.q_n(n)).interval_count(1.0, kInfinity));
  }
  EXPECT_NEAR(sum / reps, 1.0, 4.0 * std::sqrt(1.0 / reps));
}

TEST(XiNTest, OnePointPerComponentAndScaling) {
  Rng rng(37);
  const auto model = WeightModel::pareto(3.0, 0.25);
  const auto w = sample_weights(model, 5000, rng);
  const auto g = generate(w, model, {ModelKind::ENR, Normalizer::Ln}, rng);
  const auto view = components(g, w);
  const auto spec = StatisticSpec::all_vertices();
  const double qn = model.q_n(5000);
  const auto points = build_xi_n(g, view, spec, 2.0, qn);
  EXPECT_EQ(points.size(), view.num_components());
  double total = 0.0;
  for (double p : points.points()) total += p;
  EXPECT_NEAR(total * qn * 2.0, 5000.0, 1e-6);
  const auto doubled = build_xi_n(g, view, spec, 1.0, qn);
  const auto scaled = points.scaled(2.0);
  ASSERT_EQ(doubled.size(), scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i)
    EXPECT_NEAR(doubled.points()[i], scaled.points()[i], 1e-12 * scaled.points()[i]);
  EXPECT_THROW(build_xi_n(g, view, spec, 0.0, qn), std::invalid_argument);
}

}  // namespace
}  // namespace nrgraph
