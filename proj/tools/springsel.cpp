#include <iostream>

#include "springsel/interface.hpp"

int main(int argc, char** argv) { return springsel::run_cli(argc, argv, std::cout, std::cerr); }
