#include "ionshelf/ising.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ionshelf {

IsingHamiltonian qubo_to_ising(const QuboModel& model, const IsingConversionOptions& options) {
  IsingHamiltonian out;
  out.n = model.n;

  std::vector<double> fields(model.n, 0.0);
  double offset = model.constant;

  for (int i = 0; i < model.n; ++i) {
    // x = (1 - s) / 2
    fields[i] -= model.linear[i] / 2.0;
    offset += model.linear[i] / 2.0;
  }
  for (const auto& term : model.quadratic) {
    // x_i x_j = (1 - s_i - s_j + s_i s_j) / 4
    const double quarter = term.value / 4.0;
    out.couplings.push_back({term.i, term.j, quarter});
    fields[term.i] -= quarter;
    fields[term.j] -= quarter;
    offset += quarter;
  }

  std::erase_if(out.couplings, [&](const IsingCoupling& coupling) {
    return std::abs(coupling.value) < options.drop_threshold;
  });
  for (int i = 0; i < model.n; ++i) {
    if (std::abs(fields[i]) >= options.drop_threshold) {
      out.fields.push_back({i, fields[i]});
    }
  }
  out.offset = offset;
  return out;
}

QuboModel ising_to_qubo(const IsingHamiltonian& hamiltonian) {
  QuboModel model;
  model.n = hamiltonian.n;
  model.linear.assign(hamiltonian.n, 0.0);
  model.constant = hamiltonian.offset;

  for (const auto& field : hamiltonian.fields) {
    // s = 1 - 2x
    model.linear[field.i] -= 2.0 * field.value;
    model.constant += field.value;
  }
  for (const auto& coupling : hamiltonian.couplings) {
    // s_i s_j = 1 - 2x_i - 2x_j + 4 x_i x_j
    model.quadratic.push_back({coupling.i, coupling.j, 4.0 * coupling.value});
    model.linear[coupling.i] -= 2.0 * coupling.value;
    model.linear[coupling.j] -= 2.0 * coupling.value;
    model.constant += coupling.value;
  }
  return model;
}

double ising_energy(const IsingHamiltonian& hamiltonian, std::span<const int> spins) {
  if (static_cast<int>(spins.size()) != hamiltonian.n) {
    throw std::invalid_argument("spin configuration length does not match qubit count");
  }
  double energy = hamiltonian.offset;
  for (const auto& field : hamiltonian.fields) {
    energy += field.value * spins[field.i];
  }
  for (const auto& coupling : hamiltonian.couplings) {
    energy += coupling.value * spins[coupling.i] * spins[coupling.j];
  }
  return energy;
}

double ising_energy_of_bits(const IsingHamiltonian& hamiltonian, std::uint32_t bits) {
  double energy = hamiltonian.offset;
  for (const auto& field : hamiltonian.fields) {
    energy += (bits >> field.i) & 1u ? -field.value : field.value;
  }
  for (const auto& coupling : hamiltonian.couplings) {
    const bool opposite = (((bits >> coupling.i) ^ (bits >> coupling.j)) & 1u) != 0;
    energy += opposite ? -coupling.value : coupling.value;
  }
  return energy;
}

std::vector<double> ising_energy_table(const IsingHamiltonian& hamiltonian) {
  if (hamiltonian.n > 24) {
    throw std::invalid_argument("energy table limited to 24 qubits");
  }
  const std::size_t size = std::size_t{1} << hamiltonian.n;
  std::vector<double> table(size);
  for (std::size_t bits = 0; bits < size; ++bits) {
    table[bits] = ising_energy_of_bits(hamiltonian, static_cast<std::uint32_t>(bits));
  }
  return table;
}

namespace {

std::string g17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string ising_to_text(const IsingHamiltonian& hamiltonian) {
  std::string out;
  out += "offset " + g17(hamiltonian.offset) + "\n";
  for (const auto& field : hamiltonian.fields) {
    out += "h " + std::to_string(field.i) + " " + g17(field.value) + "\n";
  }
  for (const auto& coupling : hamiltonian.couplings) {
    out += "J " + std::to_string(coupling.i) + " " + std::to_string(coupling.j) + " " +
           g17(coupling.value) + "\n";
  }
  return out;
}

IsingHamiltonian ising_from_text(const std::string& text) {
  IsingHamiltonian out;
  std::istringstream stream(text);
  std::string tag;
  int max_index = -1;
  while (stream >> tag) {
    if (tag == "offset") {
      stream >> out.offset;
    } else if (tag == "h") {
      IsingField field;
      stream >> field.i >> field.value;
      out.fields.push_back(field);
      max_index = std::max(max_index, field.i);
    } else if (tag == "J") {
      IsingCoupling coupling;
      stream >> coupling.i >> coupling.j >> coupling.value;
      out.couplings.push_back(coupling);
      max_index = std::max({max_index, coupling.i, coupling.j});
    } else {
      throw std::invalid_argument("unknown tag in Hamiltonian text: " + tag);
    }
  }
  if (stream.bad()) throw std::invalid_argument("malformed Hamiltonian text");
  out.n = max_index + 1;
  return out;
}

ResourceEstimate estimate_resources(int shelves, int products, int capacity, int layers) {
  if (shelves < 1 || products < 1 || capacity < 1 || layers < 1) {
    throw std::invalid_argument("estimate_resources arguments must be >= 1");
  }

  ResourceEstimate estimate;
  estimate.layers = layers;
  const int slack_bits = slack_bits_for_capacity(capacity);
  estimate.n_qubits =
      static_cast<long long>(shelves) * (static_cast<long long>(products) + slack_bits);
  estimate.formula_deviation = (capacity & (capacity - 1)) != 0;

  // Exact counts come from building the model with reference penalties and
  // a generic interproduct matrix; beyond the size guard, fall back to
  // structural pair counts (no cancellation assumed).
  const long long cross_shelf_pairs =
      static_cast<long long>(products) * shelves * (shelves - 1) / 2;
  const long long same_shelf_size = products + slack_bits;
  const long long same_shelf_pairs =
      static_cast<long long>(shelves) * same_shelf_size * (same_shelf_size - 1) / 2;

  if (estimate.n_qubits <= 4096 && cross_shelf_pairs + same_shelf_pairs <= 4'000'000) {
    ProblemInstance inst;
    inst.shelf_capacities.assign(shelves, capacity);
    inst.product_weights.assign(products, 1);
    inst.lambda.assign(products, std::vector<double>(products, 0.5));
    zero_lambda_diagonal(inst);
    const IsingHamiltonian hamiltonian = qubo_to_ising(build_qubo(inst));
    estimate.rx_per_layer = static_cast<long long>(hamiltonian.fields.size());
    estimate.rxx_per_layer = static_cast<long long>(hamiltonian.couplings.size());
    estimate.exact_counts = true;
  } else {
    estimate.rx_per_layer = estimate.n_qubits;
    estimate.rxx_per_layer = cross_shelf_pairs + same_shelf_pairs;
    estimate.exact_counts = false;
  }

  estimate.rz_per_layer = estimate.n_qubits;
  estimate.rx_total = estimate.rx_per_layer * layers;
  estimate.rxx_total = estimate.rxx_per_layer * layers;
  estimate.rz_total = estimate.rz_per_layer * layers;
  estimate.native_1q_total = estimate.rx_total;
  estimate.native_2q_total = estimate.rxx_total;
  estimate.virtual_z_total = estimate.rz_total;
  return estimate;
}

}  // namespace ionshelf
