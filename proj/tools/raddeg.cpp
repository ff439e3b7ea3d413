#include <iostream>

#include "raddeg/cli.hpp"

int main(int argc, char** argv) { return raddeg::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }
