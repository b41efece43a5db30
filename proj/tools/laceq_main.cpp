#include <iostream>
#include <string>
#include <vector>

#include "laceq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return laceq::run_cli(args, std::cout, std::cerr);
}
