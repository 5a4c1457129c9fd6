#include <doctest.h>

#include <random>

#include "ialg/carrier.hpp"
#include "ialg/identities.hpp"
#include "ialg/kernels.hpp"
#include "ialg/op_rule.hpp"

using namespace ialg;

namespace {

MagmaPtr random_magma(Index n, std::mt19937& rng) {
  std::uniform_int_distribution<Index> cell(0, n - 1);
  CayleyTable t{n, std::vector<Index>(static_cast<std::size_t>(n) * n)};
  for (auto& c : t.cells) c = cell(rng);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Magma::from_table(std::move(t), std::move(labels));
}

/// Perturbs one cell of a structured magma so witnesses land late in the scan.
MagmaPtr nearly(const Magma& m, std::mt19937& rng) {
  CayleyTable t = m.table();
  std::uniform_int_distribution<std::size_t> pick(0, t.cells.size() - 1);
  const auto i = pick(rng);
  t.cells[i] = (t.cells[i] + 1) % m.order();
  return Magma::from_table(std::move(t), m.labels());
}

std::optional<Assignment> naive_nonassociative(const Magma& m) {
  for (Index x = 0; x < m.order(); ++x)
    for (Index y = 0; y < m.order(); ++y)
      for (Index z = 0; z < m.order(); ++z)
        if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z))) return Assignment{x, y, z};
  return std::nullopt;
}

void compare(const Magma& m) {
  CHECK(kernels::serial::first_nonassociative(m) == kernels::parallel::first_nonassociative(m));
  CHECK(kernels::serial::first_nonassociative(m) == naive_nonassociative(m));
  CHECK(kernels::serial::first_noncommuting(m) == kernels::parallel::first_noncommuting(m));
  CHECK(kernels::serial::first_nonlatin(m) == kernels::parallel::first_nonlatin(m));
  CHECK(kernels::serial::identity(m) == kernels::parallel::identity(m));
  CHECK(kernels::serial::absorber(m) == kernels::parallel::absorber(m));
  CHECK(kernels::serial::count_idempotents(m) == kernels::parallel::count_idempotents(m));
  for (const auto& id : catalog()) {
    const auto lhs = id.lhs.compile();
    const auto rhs = id.rhs.compile();
    CHECK(kernels::serial::first_violation(m, lhs, rhs) == kernels::parallel::first_violation(m, lhs, rhs));
  }
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("serial and parallel agree on random tables") {
  std::mt19937 rng(20261017);
  for (Index n : {1u, 2u, 5u, 17u, 63u, 64u, 90u}) {
    CAPTURE(n);
    compare(*random_magma(n, rng));
  }
}

TEST_CASE("serial and parallel agree near structured tables") {
  std::mt19937 rng(7);
  for (Index n : {12u, 70u, 101u}) {
    CAPTURE(n);
    const auto add = Magma::from_rule(Carrier::zmod(n), OpRule::add(), Flavor::interval);
    const auto mul = Magma::from_rule(Carrier::zmod(n), OpRule::mul(), Flavor::interval);
    compare(*add);
    compare(*mul);
    for (int trial = 0; trial < 3; ++trial) {
      compare(*nearly(*add, rng));
      compare(*nearly(*mul, rng));
    }
  }
  const auto loop = Magma::from_rule(Carrier::loop_set(71), OpRule::loop(3), Flavor::interval);
  compare(*loop);
}

TEST_CASE("known answers") {
  const auto z6 = Magma::from_rule(Carrier::zmod(6), OpRule::mul(), Flavor::interval);
  CHECK_FALSE(kernels::first_nonassociative(*z6));
  CHECK(kernels::identity(*z6) == Index{1});
  CHECK(kernels::absorber(*z6) == Index{0});
  CHECK(kernels::count_idempotents(*z6) == 4);  // 0, 1, 3, 4
  CHECK(kernels::first_nonlatin(*z6) == std::array<Index, 2>{0, 0});

  const auto loop = Magma::from_rule(Carrier::loop_set(5), OpRule::loop(2), Flavor::interval);
  CHECK_FALSE(kernels::first_nonlatin(*loop));
  CHECK(kernels::identity(*loop) == Index{0});
  CHECK(kernels::first_noncommuting(*loop) == std::array<Index, 2>{1, 2});
}

TEST_CASE("term programs evaluate like the operation") {
  const auto g = Magma::from_rule(Carrier::zmod(9), OpRule::groupoid(2, 5), Flavor::interval);
  const auto t = (Term::x() * Term::y()) * Term::z();
  const auto prog = t.compile();
  CHECK(prog.arity == 3);
  for (Index x = 0; x < 9; ++x)
    for (Index y = 0; y < 9; ++y)
      for (Index z = 0; z < 9; ++z) CHECK(prog.eval(*g, {x, y, z}) == g->op(g->op(x, y), z));
}

}
