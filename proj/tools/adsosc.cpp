#include <iostream>

#include "adsosc/cli_io.hpp"

int main(int argc, char** argv) { return adsosc::cli::main_entry(argc, argv, std::cout, std::cerr); }
