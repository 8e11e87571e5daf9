#include <iostream>

#include "tristrat/cli/app.hpp"

int main(int argc, char** argv) { return tristrat::cli::run(argc, argv, std::cout, std::cerr); }
