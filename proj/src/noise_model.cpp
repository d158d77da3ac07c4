#include "qcwalk/noise_model.hpp"

#include <stdexcept>

namespace qcwalk {

void validate(const NoiseModel& model) {
  if (const auto* m = std::get_if<IntrinsicModel>(&model)) {
    if (m->gamma < 0.0) {
      throw std::invalid_argument("intrinsic model needs gamma >= 0, got " +
                                  std::to_string(m->gamma));
    }
  } else if (const auto* m = std::get_if<HakenStroblModel>(&model)) {
    if (m->gamma < 0.0) {
      throw std::invalid_argument("haken_strobl model needs gamma >= 0, got " +
                                  std::to_string(m->gamma));
    }
  } else if (const auto* m = std::get_if<QswModel>(&model)) {
    if (m->p < 0.0 || m->p > 1.0) {
      throw std::invalid_argument("qsw model needs p in [0,1], got " +
                                  std::to_string(m->p));
    }
  }
}

std::string model_tag(const NoiseModel& model) {
  if (std::holds_alternative<UnitaryModel>(model)) return "unitary";
  if (std::holds_alternative<IntrinsicModel>(model)) return "intrinsic";
  if (std::holds_alternative<HakenStroblModel>(model)) return "haken_strobl";
  return "qsw";
}

NoiseModel model_from_tag(const std::string& tag, double parameter) {
  NoiseModel model;
  if (tag == "unitary") {
    model = UnitaryModel{};
  } else if (tag == "intrinsic") {
    model = IntrinsicModel{parameter};
  } else if (tag == "haken_strobl") {
    model = HakenStroblModel{parameter};
  } else if (tag == "qsw") {
    model = QswModel{parameter};
  } else {
    throw std::invalid_argument("unknown noise model: \"" + tag + "\"");
  }
  validate(model);
  return model;
}

}  // namespace qcwalk
