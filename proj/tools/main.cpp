#include <iostream>
#include <string>
#include <vector>

#include "gf2q/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gf2q::cli::run(args, std::cout, std::cerr);
}
