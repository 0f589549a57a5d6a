#include <iostream>
#include <vector>

#include "aybe/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return aybe::run_cli(args, std::cout, std::cerr);
}
