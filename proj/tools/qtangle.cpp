#include <iostream>

#include "qtangle/cli.hpp"

int main(int argc, char** argv) { return qtangle::cli::run(argc, argv, std::cout, std::cerr); }
