// Single translation unit for the amalgamated Catch2 implementation
// (provides main for every unit suite).
#include <catch2/catch_amalgamated.cpp>
