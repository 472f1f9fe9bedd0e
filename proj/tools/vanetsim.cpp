#include <iostream>
#include <string>
#include <vector>

#include "vanet/cli/app.hpp"

int main(int argc, char** argv) {
    return vanet::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
