#pragma once

#include "depmeas/table.hpp"

namespace depmeas::fixtures {

// Reference tables exercised throughout the tests and the oracle claims.
// Printed reference values for these fixtures live in the acceptance suite.

JointTable example1();         // 2x2 counts 30/20 over 10/40
JointTable example2();         // 3x3, singleton candidate sets on both axes
JointTable example2_linear();  // example2 with its middle and last rows swapped
JointTable example3();         // 3x3, row maxima not aligned with column maxima
JointTable example4();         // 5x5 with argmax ties on both axes

// Table pairs used by the mutual-information comparison claim. p and q are
// 2x2 (q concentrates p's mass without preserving marginals); r and s are 3x3
// with identical marginals, s the more dependent member, s's support a subset
// of r's.
JointTable mi_p();
JointTable mi_q();
JointTable mi_r();
JointTable mi_s();

}  // namespace depmeas::fixtures
