#include <doctest.h>

#include <random>

#include "wick/errors.hpp"
#include "wick/fock.hpp"
#include "wick/models.hpp"
#include "wick/wick.hpp"

using namespace wick;

namespace {

Product abstract_fields(int n) {
  Product p;
  for (int i = 0; i < n; ++i) p.push_back(field_annihilate(i));
  return p;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

std::vector<std::uint64_t> involution_numbers(int n_max) {
  std::vector<std::uint64_t> inv(n_max + 1, 1);
  for (int n = 2; n <= n_max; ++n) {
    inv[n] = inv[n - 1] + static_cast<std::uint64_t>(n - 1) * inv[n - 2];
  }
  return inv;
}

// Fills an abstract model with random complex contraction values.
std::shared_ptr<AbstractModel> random_abstract(Statistics stats, int modes, unsigned seed) {
  auto model = std::make_shared<AbstractModel>(stats, modes);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int a = 0; a < modes; ++a) {
    for (int b = 0; b < modes; ++b) {
      model->set_contraction(a, b, Complex{dist(rng), dist(rng)});
    }
  }
  return model;
}

}  // namespace

TEST_CASE("two-operator expansion: N[A1 A2] plus the contraction") {
  const AbstractModel model(Statistics::Fermi, 2);
  const Expansion e = wick_expand(abstract_fields(2), model);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].contractions.empty());
  CHECK(e.terms[0].coefficient == Complex{1.0, 0.0});
  CHECK(e.terms[0].normal_factors.size() == 2);
  CHECK(e.terms[1].contractions == std::vector<ContractionPair>{{0, 1}});
  CHECK(e.terms[1].coefficient == Complex{1.0, 0.0});
  CHECK(e.terms[1].normal_factors.empty());
}

TEST_CASE("three fermionic operators reproduce the signed four-term expansion") {
  const AbstractModel model(Statistics::Fermi, 3);
  const Expansion e = wick_expand(abstract_fields(3), model);
  REQUIRE(e.terms.size() == 4);

  CHECK(e.terms[0].contractions.empty());
  CHECK(e.terms[0].coefficient == Complex{1.0, 0.0});

  CHECK(e.terms[1].contractions == std::vector<ContractionPair>{{0, 1}});
  CHECK(e.terms[1].coefficient == Complex{1.0, 0.0});
  REQUIRE(e.terms[1].normal_factors.size() == 1);
  CHECK(e.terms[1].normal_factors[0].position == 2);

  CHECK(e.terms[2].contractions == std::vector<ContractionPair>{{0, 2}});
  CHECK(e.terms[2].coefficient == Complex{-1.0, 0.0});
  CHECK(e.terms[2].normal_factors[0].position == 1);

  CHECK(e.terms[3].contractions == std::vector<ContractionPair>{{1, 2}});
  CHECK(e.terms[3].coefficient == Complex{1.0, 0.0});
  CHECK(e.terms[3].normal_factors[0].position == 0);
}

TEST_CASE("three bosonic operators carry no reordering signs") {
  const AbstractModel model(Statistics::Bose, 3);
  const Expansion e = wick_expand(abstract_fields(3), model);
  REQUIRE(e.terms.size() == 4);
  for (const auto& term : e.terms) CHECK(term.coefficient == Complex{1.0, 0.0});
}

TEST_CASE("four fermionic operators: ten terms with the double-contraction signs") {
  const AbstractModel model(Statistics::Fermi, 4);
  const Expansion e = wick_expand(abstract_fields(4), model);
  REQUIRE(e.terms.size() == 10);
  CHECK(e.count_with_contractions(0) == 1);
  CHECK(e.count_with_contractions(1) == 6);
  CHECK(e.count_with_contractions(2) == 3);

  // <12><34> - <13><24> + <14><23>
  const auto& d1 = e.terms[7];
  CHECK(d1.contractions == std::vector<ContractionPair>{{0, 1}, {2, 3}});
  CHECK(d1.coefficient == Complex{1.0, 0.0});
  const auto& d2 = e.terms[8];
  CHECK(d2.contractions == std::vector<ContractionPair>{{0, 2}, {1, 3}});
  CHECK(d2.coefficient == Complex{-1.0, 0.0});
  const auto& d3 = e.terms[9];
  CHECK(d3.contractions == std::vector<ContractionPair>{{0, 3}, {1, 2}});
  CHECK(d3.coefficient == Complex{1.0, 0.0});
}

TEST_CASE("contract is an ordered dictionary lookup") {
  auto model = std::make_shared<AbstractModel>(Statistics::Fermi, 2);
  model->set_contraction(0, 1, Complex{0.25, -0.5});
  CHECK(contract(field_annihilate(0), field_annihilate(1), *model) == Complex{0.25, -0.5});
  // The reverse order is an independent entry, defaulting to zero.
  CHECK(contract(field_annihilate(1), field_annihilate(0), *model) == Complex{0.0, 0.0});
}

TEST_CASE("a leftmost plus-class operator kills every expectation value") {
  auto model = random_abstract(Statistics::Fermi, 4, 55);
  std::mt19937 rng(56);
  for (int a = 0; a < 4; ++a) {
    for (int round = 0; round < 10; ++round) {
      Product p{quasi_create(a)};
      const int n = 1 + 2 * static_cast<int>(rng() % 2);
      for (int i = 0; i < n; ++i) p.push_back(field_annihilate(static_cast<int>(rng() % 4)));
      CHECK(vev(p, *model) == Complex{0.0, 0.0});
      CHECK(contract(quasi_create(a), p.back(), *model) == Complex{0.0, 0.0});
    }
  }
}

TEST_CASE("extended contraction sign") {
  CHECK(extended_contraction_sign(0, Statistics::Fermi) == +1);
  CHECK(extended_contraction_sign(3, Statistics::Fermi) == -1);
  CHECK(extended_contraction_sign(7, Statistics::Bose) == +1);
}

TEST_CASE("induction_step with a plus head only regroups") {
  const AbstractModel model(Statistics::Fermi, 4);
  SignedTerm tail;
  for (int i = 1; i <= 3; ++i) tail.normal_factors.push_back({field_annihilate(i), i});
  const Expansion e = induction_step(quasi_create(0), tail, model);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].contractions.empty());
  CHECK(e.terms[0].normal_factors.size() == 4);
}

TEST_CASE("induction_step with a minus head contracts against every plus factor") {
  const AbstractModel model(Statistics::Fermi, 3);
  SignedTerm tail;
  tail.normal_factors.push_back({quasi_create(1), 1});
  tail.normal_factors.push_back({quasi_create(2), 2});
  const Expansion e = induction_step(quasi_annihilate(0), tail, model);
  REQUIRE(e.terms.size() == 3);

  // N[A0- A1+ A2+] = + A1+ A2+ A0-  (two anticommutations)
  CHECK(e.terms[0].contractions.empty());
  CHECK(e.terms[0].coefficient == Complex{1.0, 0.0});
  CHECK(e.terms[0].normal_factors.back().op == quasi_annihilate(0));

  CHECK(e.terms[1].contractions == std::vector<ContractionPair>{{0, 1}});
  CHECK(e.terms[1].coefficient == Complex{1.0, 0.0});
  CHECK(e.terms[1].normal_factors[0].op == quasi_create(2));

  CHECK(e.terms[2].contractions == std::vector<ContractionPair>{{0, 2}});
  CHECK(e.terms[2].coefficient == Complex{-1.0, 0.0});
  CHECK(e.terms[2].normal_factors[0].op == quasi_create(1));
}

TEST_CASE("induction_step shifts a tail that already uses position zero") {
  const AbstractModel model(Statistics::Fermi, 3);
  SignedTerm tail;
  tail.normal_factors.push_back({quasi_create(1), 0});
  const Expansion e = induction_step(quasi_annihilate(0), tail, model);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[1].contractions == std::vector<ContractionPair>{{0, 1}});
}

TEST_CASE("evaluated induction_step folds bracket values into coefficients") {
  auto model = std::make_shared<AbstractModel>(Statistics::Fermi, 3);
  model->set_contraction(0, 1, Complex{0.5, 0.0});
  model->set_contraction(0, 2, Complex{0.0, 2.0});
  SignedTerm tail;
  tail.normal_factors.push_back({quasi_create(1), 1});
  tail.normal_factors.push_back({quasi_create(2), 2});
  const Expansion e =
      induction_step(quasi_annihilate(0), tail, *model, {.evaluate = true});
  REQUIRE(e.terms.size() == 3);
  CHECK(e.terms[1].contractions == std::vector<ContractionPair>{{0, 1}});
  CHECK(e.terms[1].coefficient == Complex{0.5, 0.0});
  CHECK(e.terms[2].contractions == std::vector<ContractionPair>{{0, 2}});
  CHECK(e.terms[2].coefficient == Complex{0.0, -2.0});  // crossed one factor
}

TEST_CASE("wick_expand rejects the empty product") {
  const AbstractModel model(Statistics::Fermi, 1);
  CHECK_THROWS_AS(wick_expand({}, model), EmptyProduct);
}

TEST_CASE("symbolic term counts: C(n,2k)(2k-1)!! per stratum, involutions in total") {
  const auto inv = involution_numbers(8);
  for (int n = 1; n <= 8; ++n) {
    const AbstractModel model(Statistics::Fermi, n);
    const Expansion e = wick_expand(abstract_fields(n), model);
    std::uint64_t total = 0;
    for (int k = 0; 2 * k <= n; ++k) {
      const std::uint64_t expected =
          binomial(n, 2 * k) * (k == 0 ? 1 : double_factorial_pairings(2 * k));
      CHECK(e.count_with_contractions(k) == expected);
      total += expected;
    }
    CHECK(e.terms.size() == total);
    CHECK(e.terms.size() == inv[n]);
  }
}

TEST_CASE("bosonic symbolic expansions never pick up reordering signs") {
  std::mt19937 rng(83);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const AbstractModel model(Statistics::Bose, n);
    const Expansion e = wick_expand(abstract_fields(n), model);
    for (const auto& term : e.terms) CHECK(term.coefficient == Complex{1.0, 0.0});
  }
}

TEST_CASE("contractions and surviving factors partition the product slots") {
  std::mt19937 rng(89);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const AbstractModel model(rng() % 2 ? Statistics::Fermi : Statistics::Bose, n);
    const Expansion e = wick_expand(abstract_fields(n), model);
    for (const auto& term : e.terms) {
      std::vector<bool> seen(n, false);
      for (const auto& [i, j] : term.contractions) {
        REQUIRE(!seen[i]);
        REQUIRE(!seen[j]);
        seen[i] = seen[j] = true;
      }
      for (const auto& f : term.normal_factors) {
        REQUIRE(!seen[f.position]);
        seen[f.position] = true;
      }
      for (bool s : seen) CHECK(s);
    }
  }
}

TEST_CASE("vev of any odd product is exactly zero") {
  auto model = random_abstract(Statistics::Fermi, 7, 19);
  std::mt19937 rng(20);
  for (int round = 0; round < 50; ++round) {
    const int n = 2 * static_cast<int>(rng() % 4) + 1;  // 1, 3, 5, 7
    Product p;
    for (int i = 0; i < n; ++i) p.push_back(field_annihilate(static_cast<int>(rng() % 7)));
    const Complex value = vev(p, *model);
    CHECK(value.real() == 0.0);
    CHECK(value.imag() == 0.0);
  }
}

TEST_CASE("vev of four operators is <12><34> - <13><24> + <14><23>") {
  auto model = random_abstract(Statistics::Fermi, 4, 77);
  const Product p = abstract_fields(4);
  auto g = [&](int i, int j) { return model->contraction(p[i], p[j]); };
  const Complex expected = g(0, 1) * g(2, 3) - g(0, 2) * g(1, 3) + g(0, 3) * g(1, 2);
  CHECK(std::abs(vev(p, *model) - expected) < 1e-14);
}

TEST_CASE("fermi sea vev matches the exact matrix element") {
  // <F| c2 c3+ c3 c2+ |F> on 3 modes with one filled
  const FermiSeaModel model(3, 1);
  const Product p{field_annihilate(1), field_create(2), field_annihilate(2), field_create(1)};
  const FockSpace space(Statistics::Fermi, 3, 1);
  const auto ops = build_mode_operators(space);
  const auto state = build_state(space, StateSpec::fermi_sea(1));
  Eigen::VectorXcd v = state;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = symbol_matrix(space, ops, model, *it) * v;
  const Complex oracle = state.dot(v);
  CHECK(std::abs(vev(p, model) - oracle) < 1e-14);
}

TEST_CASE("corollary path and theorem path agree on the scalar part") {
  std::mt19937 rng(31);
  for (int round = 0; round < 60; ++round) {
    const Statistics stats = round % 2 ? Statistics::Fermi : Statistics::Bose;
    auto model = random_abstract(stats, 6, 100 + static_cast<unsigned>(round));
    const int n = 2 + 2 * static_cast<int>(rng() % 3);  // 2, 4, 6
    Product p;
    for (int i = 0; i < n; ++i) p.push_back(field_annihilate(static_cast<int>(rng() % 6)));
    const Expansion e = wick_expand(p, *model, {.evaluate = true});
    CHECK(std::abs(vev(p, *model) - e.scalar_part()) < 1e-12);
  }
}

TEST_CASE("evaluated expansions fold dictionary values into coefficients") {
  auto model = std::make_shared<AbstractModel>(Statistics::Fermi, 2);
  model->set_contraction(0, 1, Complex{0.5, 0.0});
  const Expansion e = wick_expand(abstract_fields(2), *model, {.evaluate = true});
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[1].coefficient == Complex{0.5, 0.0});
  CHECK(e.scalar_part() == Complex{0.5, 0.0});
}
