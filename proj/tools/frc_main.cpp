#include <iostream>
#include <string>
#include <vector>

#include "frc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return frc::run_cli(args, std::cout, std::cerr);
}
