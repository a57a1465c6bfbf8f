#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace chartab;

namespace {

/// Linear characters of Q8 from the hand table, columns moved to library order.
std::vector<ClassFunction> q8_linear(const GroupPtr& g) {
  const auto rows = oracle::to_canonical_columns(*g, oracle::q8_columns(*g), oracle::order8_rows());
  std::vector<ClassFunction> out;
  for (std::size_t i = 0; i < 4; ++i) out.emplace_back(g, rows[i]);
  return out;
}

void expect_homomorphism(const MatrixRep& rep, unsigned seed) {
  const auto& g = *rep.group();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm& s = g.element(pick(rng));
    const Perm& t = g.element(pick(rng));
    EXPECT_EQ(rep.image(s) * rep.image(t), rep.image(s * t));
  }
  EXPECT_EQ(rep.image(g.identity()), CycloMatrix::identity(rep.dim()));
}

void expect_class_constant_trace(const MatrixRep& rep) {
  const auto& g = *rep.group();
  for (const auto& cls : oracle::brute_classes(g)) {
    const Cyclo first = rep.image(*cls.begin()).trace();
    for (const auto& x : cls) EXPECT_EQ(rep.image(x).trace(), first);
  }
}

}  // namespace

TEST(MatrixRep, QuaternionTwoDimensional) {
  const MatrixRep rep = builtin_rep("q8-2dim");
  const auto& g = rep.group();
  ASSERT_EQ(rep.full_images().size(), 8u);
  const auto cols = oracle::q8_columns(*g);
  const ClassFunction chi = character_of(rep);
  const std::vector<Cyclo> expected{2, -2, 0, 0, 0};
  for (std::size_t c = 0; c < cols.size(); ++c) EXPECT_EQ(chi.at(cols[c]), expected[c]);
  EXPECT_TRUE(is_irreducible(chi));
  expect_homomorphism(rep, 1);
  expect_class_constant_trace(rep);
}

TEST(MatrixRep, DihedralRotation) {
  const MatrixRep rep = builtin_rep("dihedral-rot:4:1");
  const auto cols = oracle::d4_columns(*rep.group());
  const ClassFunction chi = character_of(rep);
  const std::vector<Cyclo> expected{2, -2, 0, 0, 0};
  for (std::size_t c = 0; c < cols.size(); ++c) EXPECT_EQ(chi.at(cols[c]), expected[c]);
  EXPECT_TRUE(is_irreducible(chi));
  expect_homomorphism(rep, 2);
  expect_class_constant_trace(rep);
}

TEST(MatrixRep, DihedralFamily) {
  for (int n = 3; n <= 9; ++n) {
    for (int r = 0; r < n; ++r) {
      const MatrixRep rep = builtin_rep("dihedral-rot:" + std::to_string(n) + ":" + std::to_string(r));
      const ClassFunction chi = character_of(rep);
      // the character at r^k is 2 cos(2 pi r k / n)
      const Perm rot = rep.group()->generators()[0];
      for (int k = 0; k < n; ++k)
        EXPECT_NEAR(chi.at(rot.pow(k)).to_complex().real(), 2 * std::cos(2 * M_PI * r * k / n), 1e-9);
      const bool degenerate = r == 0 || 2 * r == n;
      EXPECT_EQ(is_irreducible(chi), !degenerate) << n << ":" << r;
    }
  }
  expect_homomorphism(builtin_rep("dihedral-rot:7:3"), 3);
}

TEST(MatrixRep, RejectsBadInput) {
  const auto c2 = parse_group_spec("C2");
  EXPECT_THROW(extend_to_group(MatrixRep(c2, 1, {CycloMatrix{{2}}})), HomomorphismError);
  EXPECT_THROW(MatrixRep(c2, 1, {CycloMatrix{{0}}}), HomomorphismError);
  EXPECT_THROW(MatrixRep(c2, 1, {}), DomainError);
  EXPECT_THROW(MatrixRep(c2, 2, {CycloMatrix{{1}}}), DomainError);
  const auto s3 = parse_group_spec("S3");
  // (0 1) and the 3-cycle sent to commuting matrices of the wrong orders
  EXPECT_THROW(extend_to_group(MatrixRep(s3, 1, {CycloMatrix{{-1}}, CycloMatrix{{-1}}})), HomomorphismError);
  EXPECT_THROW(builtin_rep("dihedral-rot:2:1"), ParseError);
  EXPECT_THROW(builtin_rep("dihedral-rot:x:1"), ParseError);
  EXPECT_THROW(builtin_rep("nope"), ParseError);
  EXPECT_THROW(character_of(MatrixRep(c2, 1, {CycloMatrix{{-1}}})), DomainError);
}

TEST(MatrixRep, TrivialRepresentation) {
  for (const char* spec : {"S4", "C5", "Q8"}) {
    const auto g = parse_group_spec(spec);
    EXPECT_EQ(character_of(trivial_rep(g)), trivial_character(g));
  }
}

TEST(Characters, PermutationAndStandard) {
  const auto s4 = parse_group_spec("S4");
  const auto book = oracle::s4();
  const auto reps = oracle::parse_reps(*s4, book.reps);
  const std::vector<Cyclo> std4{3, 1, -1, 0, -1};
  for (std::size_t c = 0; c < reps.size(); ++c) EXPECT_EQ(standard_character(s4).at(reps[c]), std4[c]);

  const auto s5 = parse_group_spec("S5");
  const auto reps5 = oracle::parse_reps(*s5, oracle::s5().reps);
  const std::vector<Cyclo> std5{4, 2, 1, 0, 0, -1, -1};
  for (std::size_t c = 0; c < reps5.size(); ++c) EXPECT_EQ(standard_character(s5).at(reps5[c]), std5[c]);

  for (const char* spec : {"S3", "S4", "S5"}) {
    const auto g = parse_group_spec(spec);
    EXPECT_TRUE(is_irreducible(standard_character(g))) << spec;
    EXPECT_EQ(standard_character(g)[0], Cyclo(static_cast<long>(g->degree()) - 1));
    EXPECT_EQ(permutation_character(g), trivial_character(g) + standard_character(g));
  }
}

TEST(Orthogonality, QuaternionSelfPairing) {
  const MatrixRep rep = builtin_rep("q8-2dim");
  const auto report = check_matrix_orthogonality(rep, rep);
  EXPECT_EQ(report.mode, PairingMode::Self);
  EXPECT_EQ(report.pairings, 16u);
  EXPECT_TRUE(report.holds());
}

TEST(Orthogonality, QuaternionCrossPairings) {
  const MatrixRep rep = builtin_rep("q8-2dim");
  for (const auto& lin : q8_linear(rep.group())) {
    const MatrixRep one = one_dim_rep(lin);
    EXPECT_EQ(character_of(one), lin);
    const auto report = check_matrix_orthogonality(rep, one);
    EXPECT_EQ(report.mode, PairingMode::Cross);
    EXPECT_EQ(report.pairings, 4u);
    EXPECT_TRUE(report.holds());
  }
}

TEST(Orthogonality, TrivialOnC3) {
  const MatrixRep t = trivial_rep(parse_group_spec("C3"));
  const auto report = check_matrix_orthogonality(t, t);
  EXPECT_EQ(report.pairings, 1u);
  EXPECT_TRUE(report.holds());
}

TEST(Orthogonality, ReportsViolationsForReducibleReps) {
  // r = 0 gives a reducible rep, so the self pairing fails
  const MatrixRep rep = builtin_rep("dihedral-rot:4:0");
  const auto report = check_matrix_orthogonality(rep, rep);
  EXPECT_EQ(report.mode, PairingMode::Self);
  EXPECT_FALSE(report.holds());
  EXPECT_FALSE(report.violations.empty());
}

TEST(Orthogonality, EquivalentButDistinctRepsAreUndetermined) {
  const MatrixRep a = builtin_rep("dihedral-rot:5:1");
  const MatrixRep b = builtin_rep("dihedral-rot:5:4");
  ASSERT_EQ(character_of(a).values(), character_of(b).values());
  const auto ab = extend_to_group(MatrixRep(a.group(), 2, b.images()));
  const auto report = check_matrix_orthogonality(a, ab);
  EXPECT_EQ(report.mode, PairingMode::Undetermined);
  EXPECT_FALSE(report.holds());
}

TEST(Orthogonality, GroupMismatch) {
  EXPECT_THROW(check_matrix_orthogonality(trivial_rep(parse_group_spec("C3")), trivial_rep(parse_group_spec("C3"))),
               DomainError);
}
