#include <iostream>

#include <thetaform/cli.hpp>

int main(int argc, char **argv)
{
    return thetaform::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
