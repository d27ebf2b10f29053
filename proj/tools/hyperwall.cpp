#include "hyperwall/report.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyperwall::cli::run(argc, argv, std::cout, std::cerr); }
