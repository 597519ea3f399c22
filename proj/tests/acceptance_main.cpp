// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <iostream>

#include "slopecert/acceptance.hpp"

int main() { return slopecert::print_results(std::cout, slopecert::run_acceptance_suite()) ? 0 : 1; }
