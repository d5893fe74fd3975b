#include "pauligeo/cli.hpp"

int main(int argc, char** argv) { return pauligeo::run(argc, argv); }
