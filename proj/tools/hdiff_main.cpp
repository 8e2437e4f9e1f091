#include <iostream>
#include <vector>

#include "hdiff/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hdiff::cli_run(args, std::cout, std::cerr);
}
