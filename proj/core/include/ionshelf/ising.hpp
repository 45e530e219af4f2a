#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ionshelf/warehouse.hpp"

namespace ionshelf {

struct IsingCoupling {
  int i = 0;
  int j = 0;  // i < j
  double value = 0.0;
};

struct IsingField {
  int i = 0;
  double value = 0.0;
};

/// Pair-coupling Hamiltonian diagonal in the {|+>, |->} product basis:
/// E(s) = sum J_ij s_i s_j + sum h_i s_i + offset over s in {+1, -1}^n,
/// with s_i = +1 for variable value 0 (|+>) and -1 for value 1 (|->).
struct IsingHamiltonian {
  int n = 0;
  std::vector<IsingCoupling> couplings;  // sorted by (i, j)
  std::vector<IsingField> fields;        // sorted by i
  double offset = 0.0;
};

struct IsingConversionOptions {
  /// Coefficients whose magnitude falls below this after expansion are
  /// treated as numerical zeros and dropped.
  double drop_threshold = 1e-12;
};

/// Substitutes x_i = (1 - s_i) / 2 into the QUBO polynomial.
IsingHamiltonian qubo_to_ising(const QuboModel& model, const IsingConversionOptions& options = {});

/// Inverse substitution s_i = 1 - 2 x_i. The returned model carries no
/// variable layout; converting back to Ising form reproduces the input.
QuboModel ising_to_qubo(const IsingHamiltonian& hamiltonian);

/// Throws std::invalid_argument when spins.size() != n. Spins are +1/-1.
double ising_energy(const IsingHamiltonian& hamiltonian, std::span<const int> spins);

/// Energy of the configuration packed into an index: bit i set means
/// variable i is 1, i.e. spin -1. Valid for n <= 32.
double ising_energy_of_bits(const IsingHamiltonian& hamiltonian, std::uint32_t bits);

/// All 2^n energies indexed by packed bits. Throws for n > 24.
std::vector<double> ising_energy_table(const IsingHamiltonian& hamiltonian);

/// Text export: one `offset` line, then `h i value` and `J i j value`
/// lines, values with 17 significant digits.
std::string ising_to_text(const IsingHamiltonian& hamiltonian);
IsingHamiltonian ising_from_text(const std::string& text);

/// Gate-count budget for the layered evolution circuit.
struct ResourceEstimate {
  int layers = 1;
  long long n_qubits = 0;
  long long rx_per_layer = 0;   // one per nonzero field
  long long rxx_per_layer = 0;  // one per nonzero coupling
  long long rz_per_layer = 0;   // mixer, one per qubit
  long long rx_total = 0;
  long long rxx_total = 0;
  long long rz_total = 0;
  long long native_1q_total = 0;  // R(theta, phi) pulses
  long long native_2q_total = 0;  // entangling XX pulses
  long long virtual_z_total = 0;  // frame updates, no physical gate
  /// Counts came from an actually constructed Hamiltonian (reference
  /// penalty weights, uniform generic interproduct costs) rather than
  /// from structural bounds.
  bool exact_counts = false;
  /// Set when the capacity is not a power of two: the slack register uses
  /// ceil(log2(L+1)) bits, so the M*(P+1+log2 L) qubit formula does not
  /// apply verbatim.
  bool formula_deviation = false;
};

/// Throws std::invalid_argument when any argument is < 1.
ResourceEstimate estimate_resources(int shelves, int products, int capacity, int layers);

}  // namespace ionshelf
