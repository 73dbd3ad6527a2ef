#ifndef STARFAN_DATAGEN_HPP
#define STARFAN_DATAGEN_HPP

#include <string>

#include "starfan/loss.hpp"

namespace starfan {

struct GenSpec {
  std::string fan_name;
  ParamVector a_true;
  int count = 500;
  double noise = 0.9;  // probability that the emitted label is correct
  uint64_t seed = 1;
};

/// Rejection-sample `count` points uniformly from the unit ball, label
/// them with the true star classifier and flip each label independently
/// with probability 1 - noise. Deterministic for a fixed spec.
LabeledDataset sample_star_dataset(const Fan& fan, const GenSpec& spec);

/// CSV with header x1,...,xd,y and one row per point; y in {0,1}.
LabeledDataset read_csv(const std::string& path);
void write_csv(const LabeledDataset& data, const std::string& path);

/// The builtin 1-D eight-point dataset on the line (points -4..-1, 1..4).
/// variant "listed":       y = 1 at x in {-3,-2,-1,1,2}
/// variant "complemented": y = 1 at x in {-4,3,4}
LabeledDataset line_dataset_1d(const std::string& variant = "listed");

/// The 3-point planar dataset for the translated-star examples
/// ((1,1),0), ((2,2),1), ((3,3),0).
LabeledDataset diagonal_dataset_2d();

}  // namespace starfan

#endif
