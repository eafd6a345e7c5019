#include "sigma_roots/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sigma_roots::run(argc, argv, std::cout, std::cerr);
}
