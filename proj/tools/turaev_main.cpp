#include <iostream>
#include <vector>

#include "turaev/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return turaev::run_cli(args, std::cout, std::cerr);
}
