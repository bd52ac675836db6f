#include <iostream>
#include <string>
#include <vector>

#include "homfull/cli.hpp"

int main(int argc, char** argv) {
    return homfull::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
