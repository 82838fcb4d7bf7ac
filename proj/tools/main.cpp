#include <iostream>
#include <vector>

#include "coveralg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return coveralg::run_command(args, std::cout, std::cerr);
}
