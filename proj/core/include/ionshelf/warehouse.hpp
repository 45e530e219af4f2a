#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ionshelf {

/// Weights of the three cost terms: assignment ("every product is placed
/// exactly once"), interproduct ("co-shelving costly pairs is penalized"),
/// capacity ("shelf load plus slack matches the capacity").
struct PenaltyWeights {
  double assignment = 10.0;
  double interproduct = 0.5;
  double capacity = 0.25;
};

/// A gravity-shelf allocation instance: M shelves with capacities L_m,
/// P products with weights c_a, and a symmetric interproduct cost matrix
/// with entries in [0, 1) and zero diagonal.
struct ProblemInstance {
  std::vector<int> shelf_capacities;
  std::vector<int> product_weights;
  std::vector<std::vector<double>> lambda;
  PenaltyWeights penalties;

  /// Keep the literal per-product capacity square instead of the per-shelf
  /// one. Off by default; exists so both readings can be compared.
  bool fc_literal = false;

  int shelf_count() const { return static_cast<int>(shelf_capacities.size()); }
  int product_count() const { return static_cast<int>(product_weights.size()); }
};

enum class Severity { warning, error };

struct ValidationIssue {
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const;
  std::vector<std::string> errors() const;
  std::vector<std::string> warnings() const;
};

/// Checks structural errors (asymmetric lambda, entries outside [0, 1),
/// total weight above total capacity, nonpositive sizes) and advisory
/// warnings (penalty ordering, zero off-diagonal lambda entries).
/// Never throws; findings are carried in the report.
ValidationReport validate_instance(const ProblemInstance& inst);

/// Zeroes the lambda diagonal in place. Loaders apply this on ingestion.
void zero_lambda_diagonal(ProblemInstance& inst);

/// Binary-variable indexing over work and slack registers.
///
/// Work variable (product a on shelf m) sits at index m + a*M. Slack bit l
/// of shelf m sits at M*(P + l) + m when every shelf has the same bit count;
/// with mixed capacities the slack block stays contiguous, level by level,
/// skipping shelves whose slack register is shorter than the level.
struct VariableLayout {
  int shelves = 0;
  int products = 0;
  std::vector<int> shelf_capacities;
  std::vector<int> product_weights;
  std::vector<int> slack_bits;   // per shelf
  std::vector<int> level_base;   // start index of each slack level

  int work_count() const { return shelves * products; }
  int total_count() const;
  int max_slack_bits() const;

  int work_index(int product, int shelf) const;
  int slack_index(int shelf, int level) const;

  bool is_work_index(int index) const { return index < work_count(); }
  /// Inverse of work_index; valid for index < work_count().
  std::pair<int, int> work_owner(int index) const;  // (product, shelf)
  /// Inverse of slack_index; valid for work_count() <= index < total_count().
  std::pair<int, int> slack_owner(int index) const;  // (shelf, level)
};

/// Number of slack bits for a capacity L: the width of L in binary, so the
/// register reaches every value in 0..L (and overshoot is left to the
/// capacity penalty). For powers of two this is 1 + log2(L).
int slack_bits_for_capacity(int capacity);

/// Throws std::invalid_argument on nonpositive capacities or weights.
VariableLayout build_layout(const ProblemInstance& inst);

struct QuadraticTerm {
  int i = 0;
  int j = 0;  // i < j
  double value = 0.0;
};

/// Quadratic pseudo-boolean cost: constant + sum_i linear_i * b_i
/// + sum_{i<j} quadratic_ij * b_i * b_j over bits b in {0, 1}^n.
struct QuboModel {
  int n = 0;
  std::vector<QuadraticTerm> quadratic;  // sorted by (i, j), coalesced
  std::vector<double> linear;            // dense, size n
  double constant = 0.0;
  VariableLayout layout;
};

/// Expands A*f_A + B*f_B + C*f_C into QUBO coefficients. The capacity term
/// keeps the shelf sum inside the square (standard knapsack slack encoding)
/// unless inst.fc_literal is set.
QuboModel build_qubo(const ProblemInstance& inst);

/// Throws std::invalid_argument when bits.size() != model.n.
double qubo_energy(const QuboModel& model, std::span<const std::uint8_t> bits);

/// Decoded view of one bitstring.
struct AllocationReport {
  std::vector<std::vector<int>> shelf_products;  // product ids per shelf
  std::vector<int> slack_values;                 // binary-expanded, per shelf
  std::vector<int> assignment_counts;            // shelves holding each product
  bool products_feasible = false;  // every product on exactly one shelf
  bool capacity_feasible = false;  // load + slack == capacity on every shelf
  bool feasible = false;
};

AllocationReport decode_assignment(const VariableLayout& layout,
                                   std::span<const std::uint8_t> bits);

/// Inverse of decode_assignment for feasible data: product_shelf[a] is the
/// shelf holding product a, slack_values[m] the slack register value.
std::vector<std::uint8_t> encode_assignment(const VariableLayout& layout,
                                            std::span<const int> product_shelf,
                                            std::span<const int> slack_values);

// Bitstring helpers. Serialized form is ASCII '0'/'1' with variable 0
// leftmost; packed form keeps variable i in bit i of the integer.
std::string bits_to_string(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> bits_from_string(const std::string& text);
std::vector<std::uint8_t> bits_from_index(std::uint32_t index, int n);
std::uint32_t index_from_bits(std::span<const std::uint8_t> bits);

}  // namespace ionshelf
