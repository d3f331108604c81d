#include <iostream>

#include "sgs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sgs::run_cli(args, std::cout, std::cerr);
}
