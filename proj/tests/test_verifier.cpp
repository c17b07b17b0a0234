#include <doctest.h>

#include "umeb/rng.hpp"
#include "umeb/verifier.hpp"

using namespace umeb;

TEST_CASE("gram_check on the constructions") {
  const auto icosa = gram_check(icosahedron_umeb());
  CHECK(icosa.max_offdiag < 1e-10);
  CHECK(icosa.max_diag_dev < 1e-10);
  CHECK(icosa.max_unitarity_defect < 1e-10);

  const auto tiles = gram_check(tiles_umeb());
  CHECK(tiles.max_offdiag < 1e-10);
  CHECK(tiles.max_diag_dev < 1e-10);
  CHECK(tiles.max_unitarity_defect < 1e-10);
}

TEST_CASE("gram_check flags duplicates") {
  UmebCandidate c;
  c.dim = 2;
  c.members = {identity2(), pauli_x(), pauli_x()};
  const auto rep = gram_check(c);
  CHECK(rep.max_offdiag == doctest::Approx(2.0));
  CHECK_FALSE(rep.pass());
}

TEST_CASE("gram residuals are invariant under left/right unitary dressing") {
  Rng rng(31);
  const auto base = tiles_umeb();
  const Mat v = haar_unitary(4, rng);
  const Mat w = haar_unitary(4, rng);
  UmebCandidate dressed;
  dressed.dim = 4;
  for (const auto& u : base.members) dressed.members.push_back(v * u * w);
  const auto a = gram_check(base);
  const auto b = gram_check(dressed);
  CHECK(std::abs(a.max_offdiag - b.max_offdiag) < 1e-12);
  CHECK(std::abs(a.max_diag_dev - b.max_diag_dev) < 1e-12);
  CHECK(std::abs(a.max_unitarity_defect - b.max_unitarity_defect) < 1e-12);
}

TEST_CASE("complement_of dimensions") {
  CHECK(complement_of(icosahedron_umeb()).size() == 3);
  CHECK(complement_of(tiles_umeb()).size() == 4);
  CHECK(complement_of(clock_shift_basis(2)).size() == 0);

  UmebCandidate bad;
  bad.dim = 2;
  bad.members = {identity2(), identity2()};
  CHECK_THROWS_AS(complement_of(bad), CertificationError);
}

TEST_CASE("complement respects the duality bridge") {
  // a state orthogonal to every |Psi_a> extracts to an operator with zero
  // projection on every U_a
  Rng rng(37);
  const auto cand = icosahedron_umeb();
  const auto comp = complement_of(cand);
  for (int t = 0; t < 50; ++t) {
    Vec x = rng.unit_vector(comp.size());
    Mat m = Mat::Zero(3, 3);
    for (int i = 0; i < comp.size(); ++i) m += x(i) * comp.basis[i];
    const auto state = embed_operator(std::sqrt(3.0) * m);
    for (const auto& u : cand.members) {
      CHECK(std::abs(embed_operator(u).amplitudes.dot(state.amplitudes)) < 1e-10);
      CHECK(std::abs(hs_inner(u, extract_operator(state))) < 1e-10);
    }
  }
}

TEST_CASE("skew_certificate") {
  const auto icosa = skew_certificate(icosahedron_umeb());
  CHECK(icosa.holds);
  CHECK(icosa.odd_dimension);
  CHECK(icosa.max_symmetric_part < 1e-10);

  const auto tiles = skew_certificate(tiles_umeb());
  CHECK_FALSE(tiles.holds);
  CHECK_FALSE(tiles.odd_dimension);

  UmebCandidate pair;
  pair.dim = 2;
  pair.members = {identity2(), pauli_z()};
  CHECK_FALSE(skew_certificate(pair).holds);
}

TEST_CASE("tiles_form_check") {
  const auto w = tiles_form_check(tiles_umeb());
  CHECK(w.holds);
  CHECK(w.max_residual < 1e-9);

  // the parametrized basis operators are traceless and orthogonal to all
  // 12 members
  const auto members = tiles_umeb().members;
  for (int k = 0; k < 4; ++k) {
    TilesComplementParams p{0, 0, 0, 0};
    (k == 0 ? p.a : k == 1 ? p.b : k == 2 ? p.c : p.d) = 1.0;
    const Mat u = tiles_complement_operator(p);
    CHECK(std::abs(u.trace()) < 1e-12);
    for (const auto& m : members) CHECK(std::abs(hs_inner(m, u)) < 1e-12);
  }

  UmebCandidate broken = tiles_umeb();
  broken.members[4] = broken.members[6];  // duplicate => gram failure upstream
  CHECK_THROWS_AS(tiles_form_check(broken), CertificationError);
}

TEST_CASE("tiles complement params satisfy g = -2(a+b+c+d) exactly") {
  const TilesComplementParams p{cplx(1, 2), cplx(-3, 0.5), cplx(0, -1), cplx(2, 2)};
  CHECK(std::abs(p.g() + 2.0 * (p.a + p.b + p.c + p.d)) == 0.0);
}

TEST_CASE("tiles_identity_probe") {
  SUBCASE("zero params give zero operator and zero residuals") {
    const auto rec = tiles_identity_probe({0, 0, 0, 0});
    for (double r : rec.aux_residuals) CHECK(r < 1e-12);
    CHECK(rec.norm_residual < 1e-12);
    CHECK(rec.k_residual < 1e-12);
  }

  SUBCASE("a=1 rest zero: (g+d)*conj(a) = -2, operator not unitary-like") {
    const auto rec = tiles_identity_probe({1, 0, 0, 0});
    CHECK(std::abs(rec.targets[3] - cplx(-2.0)) < 1e-12);
    Mat u = tiles_complement_operator({1, 0, 0, 0});
    u *= 2.0 / u.norm();  // scale to Tr(U^dag U) = 4
    const auto w = is_maximally_entangled(embed_operator(u));
    CHECK_FALSE(w.maximally_entangled);
  }

  SUBCASE("proportionality at 100 random points") {
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
      const TilesComplementParams p{rng.complex_gaussian(), rng.complex_gaussian(),
                                    rng.complex_gaussian(), rng.complex_gaussian()};
      const auto rec = tiles_identity_probe(p);
      for (double r : rec.aux_residuals) CHECK(r < 1e-9);
      CHECK(rec.norm_residual < 1e-9);
      CHECK(rec.k_residual < 1e-9);
    }
  }
}

TEST_CASE("max_entanglement_in_subspace finds unitaries in the full space") {
  OperatorSubspace full;
  full.dim = 2;
  const double inv = 1.0 / std::sqrt(2.0);
  full.basis = {inv * identity2(), inv * pauli_x(), inv * pauli_y(), inv * pauli_z()};
  OptimizerConfig cfg;
  cfg.restarts = 20;
  cfg.seed = 5;
  const auto rep = max_entanglement_in_subspace(full, cfg);
  CHECK(rep.best_value > 1.0 - 1e-6);
  CHECK(is_maximally_entangled(rep.best_state, 1e-5).maximally_entangled);
}

TEST_CASE("antisymmetric complement caps at sqrt(3)*s_min = 0") {
  const auto comp = complement_of(icosahedron_umeb());
  OptimizerConfig cfg;
  cfg.restarts = 40;
  cfg.seed = 2;
  const auto rep = max_entanglement_in_subspace(comp, cfg);
  CHECK(rep.best_value <= 1e-6);
  CHECK(rep.best_entropy_bits == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("tiles complement stays below the unitarity value") {
  const auto comp = complement_of(tiles_umeb());
  OptimizerConfig cfg;
  cfg.restarts = 60;
  cfg.seed = 1;
  const auto rep = max_entanglement_in_subspace(comp, cfg);
  CHECK(rep.best_value < 0.999);
  CHECK(rep.best_value > 0.5);  // sanity: the optimizer is not stuck at zero
}

TEST_CASE("serial and parallel restart kernels produce identical reports") {
  const auto comp = complement_of(tiles_umeb());
  OptimizerConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 77;
  const auto serial = max_entanglement_in_subspace(comp, cfg, ExecutionPolicy::serial);
  const auto parallel = max_entanglement_in_subspace(comp, cfg, ExecutionPolicy::parallel);
  CHECK(serial.best_value == parallel.best_value);
  CHECK(serial.best_entropy_bits == parallel.best_entropy_bits);
  CHECK(serial.converged_restarts == parallel.converged_restarts);
  CHECK((serial.best_state.amplitudes - parallel.best_state.amplitudes).norm() == 0.0);
}

TEST_CASE("optimizer is monotone under subspace growth") {
  Rng rng(53);
  OptimizerConfig cfg;
  cfg.restarts = 40;
  cfg.seed = 11;
  for (int t = 0; t < 5; ++t) {
    std::vector<Mat> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(rng.ginibre(3, 3));
    const auto small = gram_schmidt_hs({gens[0], gens[1]});
    const auto large = gram_schmidt_hs(gens);
    const double small_best = max_entanglement_in_subspace(small, cfg).best_value;
    const double large_best = max_entanglement_in_subspace(large, cfg).best_value;
    CHECK(large_best >= small_best - 1e-6);
  }
}

TEST_CASE("empty subspace is rejected") {
  OperatorSubspace empty;
  empty.dim = 2;
  OptimizerConfig cfg;
  CHECK_THROWS_AS(max_entanglement_in_subspace(empty, cfg), std::domain_error);
  CHECK_THROWS_AS(max_entropy_in_subspace(empty, cfg), std::domain_error);
}

TEST_CASE("qubit_extendability_property") {
  CHECK(qubit_extendability_property(200, 7));
  // degenerate direction alpha = 1, beta = 0 handled by the same path
  UmebCandidate c;
  c.dim = 2;
  c.members = {identity2(), pauli_z(), pauli_x()};
  const auto completion = complete_deficit_one(c);
  const Mat numeric = extract_operator(completion);
  CHECK(std::abs(std::abs(hs_inner(qubit_fourth_member(1.0, 0.0), numeric)) - 2.0) < 1e-10);
}

TEST_CASE("search_umeb input validation") {
  SearchConfig cfg;
  CHECK_THROWS_AS(search_umeb(2, 1, cfg), std::domain_error);
  CHECK_THROWS_AS(search_umeb(2, 4, cfg), std::domain_error);
  CHECK_THROWS_AS(search_umeb(3, 9, cfg), std::domain_error);
}

TEST_CASE("search_umeb at d=2, n=3 always finds an extendable set") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.optimizer.restarts = 30;
    cfg.optimizer.seed = seed;
    const auto result = search_umeb(2, 3, cfg);
    REQUIRE(result.phase1_converged);
    CHECK(result.gram_residual < 1e-8);
    CHECK(result.report.best_value > 1.0 - 1e-6);
  }
}

TEST_CASE("search_umeb at d=3, n=6 reaches a UMEB-like candidate") {
  SearchConfig cfg;
  cfg.seed = 11;
  cfg.optimizer.restarts = 60;
  cfg.optimizer.seed = 11;
  const auto result = search_umeb(3, 6, cfg);
  REQUIRE(result.phase1_converged);
  const auto gram = gram_check(result.candidate);
  CHECK(gram.pass());
  CHECK(result.report.complement_dim == 3);
}

TEST_CASE("structural proof and numerical evidence agree on the icosahedron") {
  const auto comp = complement_of(icosahedron_umeb());
  REQUIRE(skew_certificate(comp).holds);
  for (std::uint64_t seed : {1ULL, 99ULL}) {
    OptimizerConfig cfg;
    cfg.restarts = 30;
    cfg.seed = seed;
    CHECK(max_entanglement_in_subspace(comp, cfg).best_value < 0.9);
  }
}
