#include "ionshelf/warehouse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ionshelf {

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& issue) {
    return issue.severity == Severity::error;
  });
}

std::vector<std::string> ValidationReport::errors() const {
  std::vector<std::string> out;
  for (const auto& issue : issues) {
    if (issue.severity == Severity::error) out.push_back(issue.message);
  }
  return out;
}

std::vector<std::string> ValidationReport::warnings() const {
  std::vector<std::string> out;
  for (const auto& issue : issues) {
    if (issue.severity == Severity::warning) out.push_back(issue.message);
  }
  return out;
}

namespace {

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), format, args...);
  return buffer;
}

}  // namespace

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  auto error = [&](std::string msg) {
    report.issues.push_back({Severity::error, std::move(msg)});
  };
  auto warn = [&](std::string msg) {
    report.issues.push_back({Severity::warning, std::move(msg)});
  };

  const int shelves = inst.shelf_count();
  const int products = inst.product_count();
  if (shelves == 0) error("instance has no shelves");
  if (products == 0) error("instance has no products");

  for (int m = 0; m < shelves; ++m) {
    if (inst.shelf_capacities[m] <= 0) {
      error(fmt("shelf %d capacity must be positive (got %d)", m, inst.shelf_capacities[m]));
    }
  }
  for (int a = 0; a < products; ++a) {
    if (inst.product_weights[a] <= 0) {
      error(fmt("product %d weight must be positive (got %d)", a, inst.product_weights[a]));
    }
  }

  const long long total_weight =
      std::accumulate(inst.product_weights.begin(), inst.product_weights.end(), 0LL);
  const long long total_capacity =
      std::accumulate(inst.shelf_capacities.begin(), inst.shelf_capacities.end(), 0LL);
  if (total_weight > total_capacity) {
    error(fmt("total weight exceeds total capacity (%lld > %lld)", total_weight, total_capacity));
  }

  if (static_cast<int>(inst.lambda.size()) != products) {
    error(fmt("lambda must be %dx%d", products, products));
  } else {
    bool zero_offdiag = false;
    for (int a = 0; a < products; ++a) {
      if (static_cast<int>(inst.lambda[a].size()) != products) {
        error(fmt("lambda row %d has wrong length", a));
        continue;
      }
      for (int b = 0; b < products; ++b) {
        const double value = inst.lambda[a][b];
        if (!(value >= 0.0) || value >= 1.0) {
          error(fmt("lambda[%d][%d] = %g outside [0, 1)", a, b, value));
        }
        if (a != b && value == 0.0) zero_offdiag = true;
        if (b > a && b < static_cast<int>(inst.lambda.size()) &&
            a < static_cast<int>(inst.lambda[b].size()) &&
            inst.lambda[a][b] != inst.lambda[b][a]) {
          error(fmt("lambda not symmetric at (%d, %d)", a, b));
        }
      }
      if (a < static_cast<int>(inst.lambda[a].size()) && inst.lambda[a][a] != 0.0) {
        warn(fmt("lambda diagonal entry %d is nonzero; it is ignored", a));
      }
    }
    if (zero_offdiag) {
      warn("lambda has zero off-diagonal entries; co-shelving those pairs is free");
    }
  }

  const auto& w = inst.penalties;
  if (w.assignment <= 0.0 || w.interproduct <= 0.0 || w.capacity <= 0.0) {
    error("penalty weights must be positive");
  } else {
    if (!(w.assignment > w.interproduct && w.assignment > w.capacity)) {
      warn("assignment penalty should dominate the interproduct and capacity weights");
    }
    if (!(w.capacity < w.interproduct)) {
      warn("capacity weight should be smaller than the interproduct weight");
    }
  }

  return report;
}

void zero_lambda_diagonal(ProblemInstance& inst) {
  const int products = inst.product_count();
  for (int a = 0; a < products && a < static_cast<int>(inst.lambda.size()); ++a) {
    if (a < static_cast<int>(inst.lambda[a].size())) inst.lambda[a][a] = 0.0;
  }
}

int slack_bits_for_capacity(int capacity) {
  if (capacity <= 0) throw std::invalid_argument("capacity must be positive");
  return std::bit_width(static_cast<unsigned int>(capacity));
}

int VariableLayout::total_count() const {
  int slack = 0;
  for (int bits : slack_bits) slack += bits;
  return work_count() + slack;
}

int VariableLayout::max_slack_bits() const {
  return slack_bits.empty() ? 0 : *std::max_element(slack_bits.begin(), slack_bits.end());
}

int VariableLayout::work_index(int product, int shelf) const {
  return shelf + product * shelves;
}

int VariableLayout::slack_index(int shelf, int level) const {
  int rank = 0;
  for (int m = 0; m < shelf; ++m) {
    if (slack_bits[m] > level) ++rank;
  }
  return level_base[level] + rank;
}

std::pair<int, int> VariableLayout::work_owner(int index) const {
  return {index / shelves, index % shelves};
}

std::pair<int, int> VariableLayout::slack_owner(int index) const {
  const int levels = max_slack_bits();
  for (int level = levels - 1; level >= 0; --level) {
    if (index >= level_base[level]) {
      int rank = index - level_base[level];
      for (int m = 0; m < shelves; ++m) {
        if (slack_bits[m] > level && rank-- == 0) return {m, level};
      }
      break;
    }
  }
  throw std::out_of_range("not a slack index");
}

VariableLayout build_layout(const ProblemInstance& inst) {
  VariableLayout layout;
  layout.shelves = inst.shelf_count();
  layout.products = inst.product_count();
  layout.shelf_capacities = inst.shelf_capacities;
  layout.product_weights = inst.product_weights;
  layout.slack_bits.reserve(layout.shelves);
  for (int capacity : inst.shelf_capacities) {
    layout.slack_bits.push_back(slack_bits_for_capacity(capacity));
  }
  const int levels = layout.max_slack_bits();
  layout.level_base.resize(levels);
  int next = layout.work_count();
  for (int level = 0; level < levels; ++level) {
    layout.level_base[level] = next;
    for (int bits : layout.slack_bits) {
      if (bits > level) ++next;
    }
  }
  return layout;
}

namespace {

/// Coefficient accumulator; coalesces duplicate pairs and folds v*v -> v.
struct QuboAccumulator {
  explicit QuboAccumulator(int n) : linear(n, 0.0) {}

  std::vector<double> linear;
  std::map<std::pair<int, int>, double> quadratic;
  double constant = 0.0;

  void add_pair(int i, int j, double value) {
    if (i == j) {
      linear[i] += value;
      return;
    }
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += value;
  }

  /// Adds scale * (sum_k weight_k * v_k + shift)^2.
  void add_square(std::span<const std::pair<int, double>> terms, double shift, double scale) {
    constant += scale * shift * shift;
    for (std::size_t p = 0; p < terms.size(); ++p) {
      const auto [i, wi] = terms[p];
      linear[i] += scale * (wi * wi + 2.0 * shift * wi);
      for (std::size_t q = p + 1; q < terms.size(); ++q) {
        const auto [j, wj] = terms[q];
        add_pair(i, j, scale * 2.0 * wi * wj);
      }
    }
  }
};

}  // namespace

QuboModel build_qubo(const ProblemInstance& inst) {
  QuboModel model;
  model.layout = build_layout(inst);
  model.n = model.layout.total_count();

  const int shelves = model.layout.shelves;
  const int products = model.layout.products;
  const auto& penalties = inst.penalties;
  QuboAccumulator acc(model.n);

  // Assignment term: (1 - sum_m x_a^m)^2 per product.
  {
    std::vector<std::pair<int, double>> terms(shelves);
    for (int a = 0; a < products; ++a) {
      for (int m = 0; m < shelves; ++m) {
        terms[m] = {model.layout.work_index(a, m), 1.0};
      }
      acc.add_square(terms, -1.0, penalties.assignment);
    }
  }

  // Interproduct term: ordered pair sum, so each unordered co-shelved pair
  // contributes lambda_ab + lambda_ba. The diagonal is ignored.
  for (int m = 0; m < shelves; ++m) {
    for (int a = 0; a < products; ++a) {
      for (int b = a + 1; b < products; ++b) {
        const double value = inst.lambda[a][b] + inst.lambda[b][a];
        if (value != 0.0) {
          acc.add_pair(model.layout.work_index(a, m), model.layout.work_index(b, m),
                       penalties.interproduct * value);
        }
      }
    }
  }

  // Capacity term with slack register (load + slack - L_m)^2 per shelf,
  // or the literal per-product variant when requested.
  for (int m = 0; m < shelves; ++m) {
    std::vector<std::pair<int, double>> slack_terms;
    for (int level = 0; level < model.layout.slack_bits[m]; ++level) {
      slack_terms.emplace_back(model.layout.slack_index(m, level),
                               static_cast<double>(1 << level));
    }
    const double capacity = inst.shelf_capacities[m];
    if (inst.fc_literal) {
      for (int a = 0; a < products; ++a) {
        std::vector<std::pair<int, double>> terms = slack_terms;
        terms.emplace_back(model.layout.work_index(a, m),
                           static_cast<double>(inst.product_weights[a]));
        acc.add_square(terms, -capacity, penalties.capacity);
      }
    } else {
      std::vector<std::pair<int, double>> terms = slack_terms;
      for (int a = 0; a < products; ++a) {
        terms.emplace_back(model.layout.work_index(a, m),
                           static_cast<double>(inst.product_weights[a]));
      }
      acc.add_square(terms, -capacity, penalties.capacity);
    }
  }

  model.linear = std::move(acc.linear);
  model.constant = acc.constant;
  model.quadratic.reserve(acc.quadratic.size());
  for (const auto& [key, value] : acc.quadratic) {
    if (value != 0.0) model.quadratic.push_back({key.first, key.second, value});
  }
  return model;
}

double qubo_energy(const QuboModel& model, std::span<const std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != model.n) {
    throw std::invalid_argument("bitstring length does not match variable count");
  }
  double energy = model.constant;
  for (int i = 0; i < model.n; ++i) {
    if (bits[i]) energy += model.linear[i];
  }
  for (const auto& term : model.quadratic) {
    if (bits[term.i] && bits[term.j]) energy += term.value;
  }
  return energy;
}

AllocationReport decode_assignment(const VariableLayout& layout,
                                   std::span<const std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != layout.total_count()) {
    throw std::invalid_argument("bitstring length does not match layout");
  }
  AllocationReport report;
  report.shelf_products.resize(layout.shelves);
  report.slack_values.assign(layout.shelves, 0);
  report.assignment_counts.assign(layout.products, 0);

  for (int a = 0; a < layout.products; ++a) {
    for (int m = 0; m < layout.shelves; ++m) {
      if (bits[layout.work_index(a, m)]) {
        report.shelf_products[m].push_back(a);
        ++report.assignment_counts[a];
      }
    }
  }
  for (int m = 0; m < layout.shelves; ++m) {
    for (int level = 0; level < layout.slack_bits[m]; ++level) {
      if (bits[layout.slack_index(m, level)]) {
        report.slack_values[m] += 1 << level;
      }
    }
  }

  report.products_feasible =
      std::all_of(report.assignment_counts.begin(), report.assignment_counts.end(),
                  [](int count) { return count == 1; });
  report.capacity_feasible = true;
  for (int m = 0; m < layout.shelves; ++m) {
    int load = 0;
    for (int a : report.shelf_products[m]) load += layout.product_weights[a];
    if (load + report.slack_values[m] != layout.shelf_capacities[m]) {
      report.capacity_feasible = false;
    }
  }
  report.feasible = report.products_feasible && report.capacity_feasible;
  return report;
}

std::vector<std::uint8_t> encode_assignment(const VariableLayout& layout,
                                            std::span<const int> product_shelf,
                                            std::span<const int> slack_values) {
  if (static_cast<int>(product_shelf.size()) != layout.products ||
      static_cast<int>(slack_values.size()) != layout.shelves) {
    throw std::invalid_argument("assignment size does not match layout");
  }
  std::vector<std::uint8_t> bits(layout.total_count(), 0);
  for (int a = 0; a < layout.products; ++a) {
    const int m = product_shelf[a];
    if (m < 0 || m >= layout.shelves) throw std::invalid_argument("shelf index out of range");
    bits[layout.work_index(a, m)] = 1;
  }
  for (int m = 0; m < layout.shelves; ++m) {
    const int value = slack_values[m];
    if (value < 0 || value >= (1 << layout.slack_bits[m])) {
      throw std::invalid_argument("slack value not representable");
    }
    for (int level = 0; level < layout.slack_bits[m]; ++level) {
      bits[layout.slack_index(m, level)] = (value >> level) & 1;
    }
  }
  return bits;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string text(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) text[i] = '1';
  }
  return text;
}

std::vector<std::uint8_t> bits_from_string(const std::string& text) {
  std::vector<std::uint8_t> bits(text.size(), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits[i] = 1;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring must contain only '0' and '1'");
    }
  }
  return bits;
}

std::vector<std::uint8_t> bits_from_index(std::uint32_t index, int n) {
  std::vector<std::uint8_t> bits(n, 0);
  for (int i = 0; i < n; ++i) bits[i] = (index >> i) & 1u;
  return bits;
}

std::uint32_t index_from_bits(std::span<const std::uint8_t> bits) {
  if (bits.size() > 32) throw std::invalid_argument("bitstring too long to pack");
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) index |= 1u << i;
  }
  return index;
}

}  // namespace ionshelf
