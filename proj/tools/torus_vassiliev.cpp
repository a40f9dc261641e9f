#include "vassiliev/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return vassiliev::cli::run_cli(argc, argv, std::cout, std::cerr);
}
