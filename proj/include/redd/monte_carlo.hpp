#pragma once

// Seeded Monte Carlo estimators for GOE determinants and for the number of
// real eigenpairs of Gaussian symmetric tensors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "redd/rng.hpp"

namespace redd {

struct GOESample {
  int n = 0;
  Eigen::MatrixXd a;
};

/// A = B - uI, B symmetric with N(0, sigma2) diagonal and N(0, sigma2/2) off-diagonal entries.
GOESample sample_goe(int n, double u, double sigma2, Rng& rng);

/// |det| or det by partial-pivot LU.
double goe_det(const Eigen::MatrixXd& a);

/// Symmetric order-p tensor on n variables, one value per sorted index class (indices 0-based).
struct SymTensor {
  int n = 0;
  int p = 0;
  std::map<std::vector<int>, double> values;
  double at(std::vector<int> idx) const;
};

/// Each class with multiplicities alpha gets N(0, alpha_1!...alpha_n!/p!).
SymTensor sample_bombieri_tensor(int n, int p, Rng& rng);

/// Variance of the class of a sorted multi-index under the Bombieri model.
double bombieri_variance(const std::vector<int>& sorted_idx, int n, int p);

/// coeffs[k] is the coefficient of x1^k x2^(degree-k).
struct BinaryForm {
  int degree = 0;
  std::vector<double> coeffs;
};

struct EigenpairForm {
  BinaryForm form;
  bool degenerate = false;  // f is identically zero
};

/// f = x2 (v x^(p-1))_1 - x1 (v x^(p-1))_2 for a tensor with n = 2.
EigenpairForm eigenpair_form_n2(const SymTensor& v);

struct RootCount {
  int count = 0;
  bool multiple_root = false;  // gcd(g, g') nontrivial
};

/// Distinct real projective zeros of f, counted exactly (Sturm sequence over Q).
RootCount count_real_projective_roots(const BinaryForm& f);

enum class Estimand { goe_absdet, goe_det, redd_goe_route, redd_goe_route_rescaled, redd_n2 };

std::string estimand_name(Estimand e);
std::optional<Estimand> parse_estimand(const std::string& s);

struct EstimandSpec {
  Estimand kind = Estimand::goe_absdet;
  int n = 1;
  double u = 0.0;
  double sigma2 = 1.0;
  int p = 2;
};

struct Histogram {
  std::map<int, std::int64_t> bins;
  std::int64_t multiple_root_samples = 0;
  std::string to_csv() const;
};

struct EstimatorResult {
  std::string estimand;
  nlohmann::ordered_json params;
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::optional<Histogram> histogram;

  nlohmann::ordered_json to_json() const;
};

/// Throws std::invalid_argument for invalid parameters (n_samples < 100, n != 2 for redd-n2, ...).
EstimatorResult estimate(const EstimandSpec& spec, std::int64_t n_samples, std::uint64_t seed, int workers);

struct Reference {
  double value = 0.0;
  double std_error = 0.0;  // nonzero when part of the reference is itself estimated
  std::string source;
};

/// Closed-form value of the estimand when one exists. For odd-n goe-absdet the
/// J_n part comes from a signed-determinant run on an independent seed.
std::optional<Reference> closed_form_reference(const EstimandSpec& spec, std::int64_t n_samples, std::uint64_t seed,
                                               int workers);

/// (mean - ref) / sqrt(se^2 + ref_se^2); 0 when both errors vanish and the values agree.
double z_score(const EstimatorResult& r, const Reference& ref);

/// Seed of the companion signed-determinant run used by closed_form_reference.
std::uint64_t companion_seed(std::uint64_t seed);

}  // namespace redd
