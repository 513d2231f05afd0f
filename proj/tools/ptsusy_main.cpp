#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) { return ptsusy::cli::run_cli(argc, argv, std::cout, std::cerr); }
