#include <iostream>

#include "succoef/cli.hpp"

int main(int argc, char** argv) { return succoef::cli::run(argc, argv, std::cout, std::cerr); }
