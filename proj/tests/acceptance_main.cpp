// Acceptance gate: one PASS/FAIL line per criterion; exit status is the
// number of gating failures (criterion 10 is informational only).
#include <iostream>

#include "acceptance.hpp"

int main() { return toral::acceptance::run_suite(std::cout); }
