#include "curling/cli.hpp"

int main(int argc, char** argv) { return curling::run(argc, argv); }
