#include "depmeas/fixtures.hpp"

namespace depmeas::fixtures {

JointTable example1() {
  return JointTable::from_probs({{0.3, 0.2}, {0.1, 0.4}});
}

JointTable example2() {
  return JointTable::from_probs({{0.05, 0.03, 0.20},
                                 {0.30, 0.07, 0.05},
                                 {0.04, 0.20, 0.06}});
}

JointTable example2_linear() {
  return JointTable::from_probs({{0.05, 0.03, 0.20},
                                 {0.04, 0.20, 0.05},
                                 {0.30, 0.07, 0.06}});
}

JointTable example3() {
  return JointTable::from_probs({{0.30, 0.03, 0.20},
                                 {0.05, 0.07, 0.05},
                                 {0.04, 0.20, 0.06}});
}

JointTable example4() {
  return JointTable::from_probs({{0.11, 0.01, 0.01, 0.01, 0.01},
                                 {0.01, 0.01, 0.01, 0.01, 0.25},
                                 {0.01, 0.10, 0.10, 0.01, 0.01},
                                 {0.01, 0.01, 0.01, 0.15, 0.01},
                                 {0.01, 0.10, 0.01, 0.01, 0.01}});
}

JointTable mi_p() {
  return JointTable::from_probs({{3.0 / 8, 1.0 / 8}, {1.0 / 8, 3.0 / 8}});
}

JointTable mi_q() {
  return JointTable::from_probs({{1.0 / 2, 0.0}, {1.0 / 8, 3.0 / 8}});
}

JointTable mi_r() {
  const double s = 1.0 / 7;
  return JointTable::from_probs({{0.0, s, s}, {s, s, s}, {s, s, 0.0}});
}

JointTable mi_s() {
  const double s = 1.0 / 7;
  return JointTable::from_probs({{0.0, 0.0, 2 * s}, {s, 2 * s, 0.0}, {s, s, 0.0}});
}

}  // namespace depmeas::fixtures
