#pragma once

#include "boxideal/box.hpp"
#include "boxideal/catalecticant.hpp"
#include "boxideal/groebner.hpp"
#include "boxideal/hilbert.hpp"
#include "boxideal/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxideal {

using PlanePoint = std::array<Rational, 3>;

/// s = C(d+1,2) points of P^2 in generic position.
struct PointSet {
  int d = 1;
  std::uint64_t seed = 0;
  std::size_t attempts = 1;  // draws until the certificate held
  std::vector<PlanePoint> points;
};

/// Rank of the evaluation matrix of degree-tau monomials equals
/// min(C(tau+2,2), s) for every tau <= d, and the points are distinct.
bool generic_certificate(const PointSet& pts);

/// Integer coordinates in [-9, 9] with last coordinate 1, redrawn until the
/// certificate holds. Throws GenericityError after `max_attempts` draws.
PointSet gen_points(int d, std::uint64_t seed, std::size_t max_attempts = 100);

/// Validates a user-supplied point set (count and certificate).
PointSet explicit_points(int d, std::vector<PlanePoint> points);

/// w1, w2, w3 with lex order w1 > w2 > w3.
RingPtr plane_ring();

/// Exponent vector of a ternary monomial over plane_ring().
Monomial plane_monomial(const Exponent3& alpha);

/// Basis of I_d: the reduced row echelon basis of the kernel of the
/// evaluation matrix over the lex-ordered degree-d monomials. Throws
/// GenericityError unless the kernel has dimension d+1.
std::vector<Polynomial> interpolate_Id(const PointSet& pts);

struct HilbertBurchData {
  std::vector<Polynomial> F;                 // d+1 forms of degree d
  std::vector<std::vector<Polynomial>> L;    // d x (d+1) linear forms
  std::vector<std::vector<std::array<Rational, 3>>> lambda;  // lambda[l][j][k]: coeff of w_k in L_lj
  Rational rho;                              // F_j = rho (-1)^(j+1) det(L minus column j)
};

/// All linear syzygies of F; a canonical basis of the d-dimensional solution
/// space gives the rows of L. Verifies the syzygy identity, the signed-minor
/// identity (computing rho) and rank L = d at a random point off F_1 = 0.
HilbertBurchData hilbert_burch(const std::vector<Polynomial>& F, std::uint64_t seed = 0);

/// Signed maximal minors (-1)^(j+1) det(L minus column j), j = 1..d+1.
std::vector<Polynomial> signed_minors(const HilbertBurchData& hb);

struct RelationSet {
  int n = 1;
  std::size_t u = 3;                  // C(n+2,2)
  std::vector<Exponent3> z_monomials;  // degree n, lex
  std::vector<Exponent3> betas;        // degree n-1, lex
  RingPtr ring;                        // x[i,j], 1 <= i <= u, 1 <= j <= d+1
  std::vector<Polynomial> relations;   // index beta * d + (l-1)
  RationalMatrix E;                    // columns follow ring variable order
  std::size_t rank = 0;
};

/// x[i,j] for 1 <= i <= u, 1 <= j <= d+1, degree reverse lex with x[1,1]
/// smallest.
RingPtr blowup_ring(int d, int n);

/// The linear relations sum mu_{l i j} x[i,j] with
/// mu_{l alpha j} = sum over w^beta w_k = w^alpha of lambda_{l j k}.
/// Throws VerificationError if E does not have maximal rank.
RelationSet build_relations(const HilbertBurchData& hb, int n);

/// Box (d+1) x 3 x C(n+1,2) with entry(i,j,k) = x[c, i] where z_c sits at
/// (j,k) in the Catalecticant pattern.
BoxMatrix build_box_A(int d, int n, const RingPtr& ring);

struct BlowupModel {
  int d = 1;
  int n = 1;
  int t = 2;          // d + n
  std::size_t p = 5;  // C(n+2,2)(d+1) - 1
  PointSet points;
  HilbertBurchData hb;
  RelationSet rel;
  CatalecticantPattern cat;
  BoxMatrix box;
  Ideal ideal;  // relations first, then I_2(A)
};

/// Runs points -> I_d -> Hilbert-Burch -> relations -> box -> ideal.
BlowupModel build_model(int d, int n, std::uint64_t seed);
BlowupModel build_model(int n, PointSet points);

/// <relations, I_2(A)>.
Ideal assemble_ideal(const RelationSet& rel, const BoxMatrix& box);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VanishingReport {
  std::vector<Check> checks;
  bool passed() const;
};

struct VanishingOptions {
  std::size_t image_points = 20;    // random points P of P^2 mapped by phi
  std::size_t ambient_points = 20;  // random points of P^p
  std::uint64_t seed = 0;
};

/// x[i,j] -> z_i F_j kills every generator identically; spot checks at
/// phi(P) for random P, including rank-1 structure of M(Q) and recovery of
/// the Veronese vector; some generator is nonzero at random points of P^p;
/// the M-minor and Catalecticant-minor families vanish under their
/// substitutions; the structural identities of the earlier stages hold.
VanishingReport verify_vanishing(const BlowupModel& model, const VanishingOptions& options = {});

struct SurfaceReport {
  bool complete = false;
  std::string partial_reason;
  std::optional<std::size_t> dimension;
  std::optional<mpz_class> degree;
  std::size_t expected_dimension = 3;
  long expected_degree = 0;  // t^2 - s
  std::size_t linear_rank = 0;
  std::size_t expected_linear = 0;
  std::size_t ambient = 0;
  std::size_t expected_ambient = 0;
  std::size_t degree_t_dimension = 0;  // dim I_t from the forms w^alpha F_j
  std::size_t expected_degree_t_dimension = 0;
  std::size_t gb_size = 0;
  bool passed() const;  // every computed quantity matches
};

SurfaceReport verify_surface(const BlowupModel& model, const GbOptions& gb = {},
                             const HilbertFitOptions& fit = {});

/// The n = 1 box is the ordinary 3 x (d+1) matrix M = (x[i,j]) laid on its
/// side: entry(i,j,1) = x[j,i], all distinct, and its minors are those of M.
Check collapse_check(const BlowupModel& model);

} // namespace boxideal
