#include <iostream>
#include <string>
#include <vector>

#include "semigap/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return semigap::run_cli(args, std::cout, std::cerr, semigap::resolve_size_guard());
}
