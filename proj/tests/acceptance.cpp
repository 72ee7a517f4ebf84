// Acceptance gate: runs the pinned full-size configuration and prints one
// PASS/FAIL line per criterion; exit status 0 iff everything passed.

#include "tyv/acceptance.hpp"

#include <iostream>

int main() { return tyv::run_acceptance(std::cout); }
