#include <array>
#include <string_view>

#include "glyphnet/persistence.hpp"
#include "glyphnet/synthgen.hpp"

namespace glyphnet {

namespace {

// 50x50 block-letter templates, one row per line.
constexpr std::array<std::string_view, kLetterCount> kTemplates = {
    // a
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................................##.........\n"
    "......................................####........\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................########........######.......\n"
    "..................##############.....######.......\n"
    "................##################...######.......\n"
    "..............######################.######.......\n"
    ".............##############################.......\n"
    "............##########......###############.......\n"
    "...........########............############.......\n"
    "..........########..............###########.......\n"
    "..........######..................#########.......\n"
    ".........######....................########.......\n"
    ".........######....................########.......\n"
    "........######......................#######.......\n"
    "........######......................#######.......\n"
    "........#####........................######.......\n"
    "........#####........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........#####........................######.......\n"
    "........#####........................######.......\n"
    "........######......................#######.......\n"
    "........######......................#######.......\n"
    ".........######....................########.......\n"
    ".........#######..................#########.......\n"
    "..........#######................##########.......\n"
    "...........#######..............###########.......\n"
    "...........#########..........#############.......\n"
    "............###########....################.......\n"
    ".............##############################.......\n"
    "...............####################..######.......\n"
    "................##################...######.......\n"
    "..................##############.....######.......\n"
    "......................######.........######.......\n"
    "......................................####........\n"
    ".......................................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // b
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.........######......................\n"
    ".......######....################.................\n"
    ".......######.######################..............\n"
    ".......###############################............\n"
    ".......################################...........\n"
    ".......#################################..........\n"
    ".......###########..............#########.........\n"
    ".......#########..................########........\n"
    ".......#######......................######........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......#######......................######........\n"
    ".......#########..................########........\n"
    ".......###########..............#########.........\n"
    ".......#################################..........\n"
    ".......################################...........\n"
    ".......###############################............\n"
    ".......######.######################..............\n"
    ".......######....################.................\n"
    "........####..........######......................\n"
    ".........##.......................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // c
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..........................####....................\n"
    ".....................##############...............\n"
    "...................###################............\n"
    ".................#######################..........\n"
    "...............##########################.........\n"
    "..............############################........\n"
    ".............##########...........#########.......\n"
    "............#########...............#######.......\n"
    "...........########...................####........\n"
    "...........#######.....................##.........\n"
    "..........#######.................................\n"
    ".........#######..................................\n"
    ".........######...................................\n"
    ".........#####....................................\n"
    "........######....................................\n"
    "........#####.....................................\n"
    "........#####.....................................\n"
    "........#####.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    "........#####.....................................\n"
    "........#####.....................................\n"
    "........#####.....................................\n"
    "........######....................................\n"
    ".........#####....................................\n"
    ".........######...................................\n"
    ".........#######..................................\n"
    "..........#######.................................\n"
    "...........#######.....................##.........\n"
    "...........########...................####........\n"
    "............#########...............#######.......\n"
    ".............##########...........#########.......\n"
    "..............############################........\n"
    "...............##########################.........\n"
    ".................#######################..........\n"
    "...................###################............\n"
    ".....................##############...............\n"
    "..........................####....................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // d
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................................##.........\n"
    "......................................####........\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    "......................######.........######.......\n"
    ".................################....######.......\n"
    "..............######################.######.......\n"
    "............###############################.......\n"
    "...........################################.......\n"
    "..........#################################.......\n"
    ".........#########..............###########.......\n"
    "........########..................#########.......\n"
    "........######......................#######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........######......................#######.......\n"
    "........########..................#########.......\n"
    ".........#########..............###########.......\n"
    "..........#################################.......\n"
    "...........################################.......\n"
    "............###############################.......\n"
    "..............######################.######.......\n"
    ".................################....######.......\n"
    "......................######..........####........\n"
    ".......................................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // e
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................####.......................\n"
    "...................############...................\n"
    ".................################.................\n"
    "................##################................\n"
    "..............######################..............\n"
    ".............########################.............\n"
    "............#########........#########............\n"
    "...........########............########...........\n"
    "...........#######..............#######...........\n"
    "..........#######................#######..........\n"
    "..........######..................######..........\n"
    ".........######....................######.........\n"
    ".........#####......................#####.........\n"
    "........######......................######........\n"
    "........######......................######........\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........##################################........\n"
    ".......####################################.......\n"
    ".......####################################.......\n"
    ".......####################################.......\n"
    ".......###################################........\n"
    "........#################################.........\n"
    "........#####.....................................\n"
    "........#####.....................................\n"
    "........######....................................\n"
    "........######....................................\n"
    ".........#####....................................\n"
    ".........######.....................#.............\n"
    "..........######..................#####...........\n"
    "..........#######................######...........\n"
    "...........#######..............#######...........\n"
    "...........########............########...........\n"
    "............#########........#########............\n"
    ".............########################.............\n"
    "..............######################..............\n"
    "................##################................\n"
    ".................################.................\n"
    "...................############...................\n"
    ".......................####.......................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // f
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..............................####................\n"
    "..........................###########.............\n"
    "........................###############...........\n"
    ".......................##################.........\n"
    "......................####################........\n"
    ".....................#####################........\n"
    ".....................#######........#######.......\n"
    "....................######...........#####........\n"
    "....................######............####........\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    ".........############################.............\n"
    "........###############################...........\n"
    ".......################################...........\n"
    ".......################################...........\n"
    "........###############################...........\n"
    ".........############################.............\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "....................#####.........................\n"
    "......................#...........................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // g
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................####............##.........\n"
    "..................##############......####........\n"
    "...............####################..######.......\n"
    "..............######################.######.......\n"
    "............###############################.......\n"
    "...........################################.......\n"
    "..........#########............############.......\n"
    ".........########................##########.......\n"
    ".........######....................########.......\n"
    "........######......................#######.......\n"
    "........######......................#######.......\n"
    "........#####........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........#####........................######.......\n"
    "........######......................#######.......\n"
    "........######......................#######.......\n"
    ".........#######..................#########.......\n"
    ".........########................##########.......\n"
    "..........##########..........#############.......\n"
    "...........################################.......\n"
    "............###############################.......\n"
    "..............######################.######.......\n"
    "................##################...######.......\n"
    "..................##############.....######.......\n"
    "........................##...........######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    "..........##.........................######.......\n"
    ".........####........................#####........\n"
    "........######......................######........\n"
    "........########..................########........\n"
    ".........#########..............#########.........\n"
    "..........##############################..........\n"
    "...........############################...........\n"
    "............##########################............\n"
    "..............######################..............\n"
    ".................################.................\n"
    "......................######......................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // h
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######....################.................\n"
    ".......######.######################..............\n"
    ".......###############################............\n"
    ".......#################################..........\n"
    ".......##################################.........\n"
    ".......###########..............##########........\n"
    ".......########....................#######........\n"
    ".......#######......................######........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........####..........................####........\n"
    ".........##............................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // i
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "........................##........................\n"
    "......................######......................\n"
    "......................######......................\n"
    ".....................########.....................\n"
    ".....................########.....................\n"
    ".....................########.....................\n"
    "......................######......................\n"
    ".......................####.......................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "........................##........................\n"
    ".......................####.......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    "......................######......................\n"
    ".......................####.......................\n"
    "........................##........................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // j
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "....................................###...........\n"
    "..................................#######.........\n"
    ".................................#########........\n"
    ".................................##########.......\n"
    ".................................##########.......\n"
    ".................................#########........\n"
    "..................................########........\n"
    "....................................####..........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "....................................####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "...................................#####..........\n"
    "........####.......................#####..........\n"
    "........####.......................#####..........\n"
    ".......#######....................######..........\n"
    "........########...............#########..........\n"
    "........###############################...........\n"
    ".........#############################............\n"
    "..........###########################.............\n"
    "............#######################...............\n"
    "...............#################..................\n"
    ".....................#####........................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // k
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.......................####..........\n"
    ".......######.....................#######.........\n"
    ".......######..................##########.........\n"
    ".......######................###########..........\n"
    ".......######..............############...........\n"
    ".......######............############.............\n"
    ".......######..........############...............\n"
    ".......######........############.................\n"
    ".......######......############...................\n"
    ".......######...#############.....................\n"
    ".......######.#############.......................\n"
    ".......####################.......................\n"
    ".......#####################......................\n"
    ".......#######################....................\n"
    ".......###########....#########...................\n"
    ".......#########.......##########.................\n"
    ".......#######...........##########...............\n"
    ".......######.............##########..............\n"
    ".......######...............##########............\n"
    ".......######.................#########...........\n"
    ".......######..................##########.........\n"
    ".......######....................#########........\n"
    ".......######.....................#########.......\n"
    ".......######.......................#######.......\n"
    "........####..........................####........\n"
    ".........##............................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // l
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......#######....................................\n"
    "........##########................................\n"
    "........##################################........\n"
    ".........#################################........\n"
    "...........################################.......\n"
    ".............#############################........\n"
    ".................########################.........\n"
    "..........................########................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // m
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######..#####..........#####...............\n"
    ".......###############......#########.............\n"
    ".......#################..#############...........\n"
    ".......#################################..........\n"
    ".......#################################..........\n"
    ".......#########...############...#######.........\n"
    ".......########.....##########.....######.........\n"
    ".......#######.......########.......######........\n"
    ".......######.........######.........#####........\n"
    ".......######.........######.........#####........\n"
    ".......######.........######.........#####........\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    ".......######.........######.........######.......\n"
    "........####...........####...........####........\n"
    ".........##.............##.............##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // n
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######.......##########....................\n"
    ".......######....################.................\n"
    ".......######..####################...............\n"
    ".......##############################.............\n"
    ".......###############################............\n"
    ".......###############......###########...........\n"
    ".......############............#########..........\n"
    ".......##########................########.........\n"
    ".......########....................######.........\n"
    ".......#######......................######........\n"
    ".......#######......................######........\n"
    ".......######........................#####........\n"
    ".......######........................#####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........####..........................####........\n"
    ".........##............................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // o
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................####.......................\n"
    "...................############...................\n"
    ".................################.................\n"
    "................##################................\n"
    "..............######################..............\n"
    ".............########################.............\n"
    "............#########........#########............\n"
    "...........########............########...........\n"
    "...........#######..............#######...........\n"
    "..........#######................#######..........\n"
    "..........######..................######..........\n"
    ".........######....................######.........\n"
    ".........#####......................#####.........\n"
    "........######......................######........\n"
    "........######......................######........\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........######......................######........\n"
    "........######......................######........\n"
    ".........#####......................#####.........\n"
    ".........######....................######.........\n"
    "..........######..................######..........\n"
    "..........#######................#######..........\n"
    "...........#######..............#######...........\n"
    "...........########............########...........\n"
    "............#########........#########............\n"
    ".............########################.............\n"
    "..............######################..............\n"
    "................##################................\n"
    ".................################.................\n"
    "...................############...................\n"
    ".......................####.......................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // p
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............####.......................\n"
    "........####......##############..................\n"
    ".......######..####################...............\n"
    ".......##############################.............\n"
    ".......###############################............\n"
    ".......################################...........\n"
    ".......############............#########..........\n"
    ".......##########................########.........\n"
    ".......########....................######.........\n"
    ".......#######......................######........\n"
    ".......######........................#####........\n"
    ".......######........................#####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................#####........\n"
    ".......######........................#####........\n"
    ".......#######......................######........\n"
    ".......########....................#######........\n"
    ".......##########................########.........\n"
    ".......############............#########..........\n"
    ".......#################..#############...........\n"
    ".......###############################............\n"
    ".......##############################.............\n"
    ".......######..####################...............\n"
    ".......######....################.................\n"
    ".......######.........######......................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    "........####......................................\n"
    ".........##.......................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // q
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "....................###.........##................\n"
    "................###########....####...............\n"
    "..............###############.#####...............\n"
    ".............######################...............\n"
    "............#######################...............\n"
    "...........########################...............\n"
    "..........########.......##########...............\n"
    ".........#######...........########...............\n"
    ".........######.............#######...............\n"
    "........######...............######...............\n"
    "........######...............######...............\n"
    "........#####.................#####...............\n"
    "........#####.................#####...............\n"
    ".......######.................#####...............\n"
    ".......######.................#####...............\n"
    ".......######.................#####...............\n"
    "........#####.................#####...............\n"
    "........#####.................#####...............\n"
    "........######...............######...............\n"
    "........######...............######...............\n"
    ".........######.............#######...............\n"
    ".........#######..........#########...............\n"
    "..........########.......##########...............\n"
    "...........########################...............\n"
    "............#######################...............\n"
    ".............######################...............\n"
    "...............#############..#####...............\n"
    ".................#########....#####...............\n"
    "..............................#####...............\n"
    "..............................#####...............\n"
    "..............................#####...............\n"
    "..............................#####...............\n"
    "..............................#####..#####........\n"
    "..............................#############.......\n"
    "..............................#############.......\n"
    "..............................############........\n"
    "..............................###########.........\n"
    "..............................#########...........\n"
    "...............................#####..............\n"
    "................................##................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // r
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##.......................................\n"
    "........####......................................\n"
    ".......######...........############..............\n"
    ".......######.......####################..........\n"
    ".......######....#########################........\n"
    ".......######..############################.......\n"
    ".......####################################.......\n"
    ".......###################........########........\n"
    ".......##############..................##.........\n"
    ".......############...............................\n"
    ".......##########.................................\n"
    ".......########...................................\n"
    ".......#######....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    "........####......................................\n"
    ".........##.......................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // s
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................####.......................\n"
    ".................################.................\n"
    "...............####################...............\n"
    ".............########################.............\n"
    "...........############################...........\n"
    "..........##############################..........\n"
    ".........##########............#########..........\n"
    ".........#######..................#######.........\n"
    "........#######....................#####..........\n"
    "........#####........................##...........\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    ".......######.....................................\n"
    "........#####.....................................\n"
    "........#######...................................\n"
    ".........#######..................................\n"
    ".........##########...............................\n"
    "..........#################.......................\n"
    "...........######################.................\n"
    ".............######################...............\n"
    "...............######################.............\n"
    ".................######################...........\n"
    ".......................#################..........\n"
    "...............................##########.........\n"
    "..................................#######.........\n"
    "...................................#######........\n"
    ".....................................#####........\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    ".....................................######.......\n"
    "...........##........................#####........\n"
    "..........#####....................#######........\n"
    ".........#######..................#######.........\n"
    "..........#########............##########.........\n"
    "..........##############################..........\n"
    "...........############################...........\n"
    ".............########################.............\n"
    "...............####################...............\n"
    ".................################.................\n"
    ".......................####.......................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // t
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".......................##.........................\n"
    "......................####........................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    ".........################################.........\n"
    "........##################################........\n"
    ".......####################################.......\n"
    ".......####################################.......\n"
    "........##################################........\n"
    ".........################################.........\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................#####.......................\n"
    "......................######......................\n"
    "......................########....................\n"
    ".......................###################........\n"
    "........................###################.......\n"
    ".........................##################.......\n"
    "..........................################........\n"
    "............................#############.........\n"
    ".................................####.............\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // u
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............................##.........\n"
    "........####..........................####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........#####........................######.......\n"
    "........#####........................######.......\n"
    "........######......................#######.......\n"
    ".........#####......................#######.......\n"
    ".........######....................########.......\n"
    "..........######..................#########.......\n"
    "..........########..............###########.......\n"
    "...........#########..........#############.......\n"
    "............###############################.......\n"
    ".............##############################.......\n"
    "..............######################.######.......\n"
    "................##################...######.......\n"
    "..................##############......####........\n"
    ".......................####............##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // v
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............................##.........\n"
    "........####..........................####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........######......................######........\n"
    "........######......................######........\n"
    ".........#####......................#####.........\n"
    ".........######....................######.........\n"
    "..........#####....................#####..........\n"
    "..........######..................######..........\n"
    "..........######..................######..........\n"
    "...........######................######...........\n"
    "...........######................######...........\n"
    "............#####................#####............\n"
    "............######..............######............\n"
    ".............#####..............#####.............\n"
    ".............######............######.............\n"
    "..............#####............#####..............\n"
    "..............######..........######..............\n"
    "..............######..........######..............\n"
    "...............######........######...............\n"
    "...............######........######...............\n"
    "................#####........#####................\n"
    "................######......######................\n"
    ".................#####......#####.................\n"
    ".................######....######.................\n"
    "..................#####....#####..................\n"
    "..................######..######..................\n"
    "..................######..######..................\n"
    "...................############...................\n"
    "...................############...................\n"
    "....................##########....................\n"
    "....................##########....................\n"
    ".....................########.....................\n"
    ".....................########.....................\n"
    ".....................########.....................\n"
    "......................######......................\n"
    "......................######......................\n"
    ".......................####.......................\n"
    "........................##........................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // w
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............................##.........\n"
    "........####..........................####........\n"
    ".......######........................######.......\n"
    ".......######........................######.......\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........#####........................#####........\n"
    "........######......................######........\n"
    "........######......................######........\n"
    ".........#####.........####.........#####.........\n"
    ".........#####........######........#####.........\n"
    ".........#####........######........#####.........\n"
    ".........#####........######........#####.........\n"
    ".........######......########......######.........\n"
    "..........#####......########......#####..........\n"
    "..........#####......########......#####..........\n"
    "..........#####......########......#####..........\n"
    "..........#####.....##########.....#####..........\n"
    "..........######....##########....######..........\n"
    "...........#####....##########....#####...........\n"
    "...........#####...############...#####...........\n"
    "...........#####...#####..#####...#####...........\n"
    "...........#####...#####..#####...#####...........\n"
    "...........######.######..######.######...........\n"
    "............#####.#####....#####.#####............\n"
    "............#####.#####....#####.#####............\n"
    "............###########....###########............\n"
    "............##########......##########............\n"
    "............##########......##########............\n"
    "............##########......##########............\n"
    ".............########........########.............\n"
    ".............########........########.............\n"
    ".............########........########.............\n"
    ".............#######..........#######.............\n"
    ".............#######..........#######.............\n"
    "..............######..........######..............\n"
    "..............#####............#####..............\n"
    "..............#####............#####..............\n"
    "..............#####............#####..............\n"
    "................#................#................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // x
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............................##.........\n"
    "........####..........................####........\n"
    ".......######........................######.......\n"
    ".......#######......................#######.......\n"
    "........#######....................#######........\n"
    ".........#######..................#######.........\n"
    "..........#######................#######..........\n"
    "...........######................######...........\n"
    "...........#######..............#######...........\n"
    "............#######............#######............\n"
    ".............#######..........#######.............\n"
    "..............#######........#######..............\n"
    "...............#######......#######...............\n"
    "................#######....#######................\n"
    ".................#######..#######.................\n"
    "..................######..######..................\n"
    "..................##############..................\n"
    "...................############...................\n"
    "....................##########....................\n"
    ".....................########.....................\n"
    ".....................########.....................\n"
    "....................##########....................\n"
    "...................############...................\n"
    "..................##############..................\n"
    "..................######..######..................\n"
    ".................#######..#######.................\n"
    "................#######....#######................\n"
    "...............#######......#######...............\n"
    "..............#######........#######..............\n"
    ".............#######..........#######.............\n"
    "............#######............#######............\n"
    "...........#######..............#######...........\n"
    "...........######................######...........\n"
    "..........#######................#######..........\n"
    ".........#######..................#######.........\n"
    "........#######....................#######........\n"
    ".......#######......................#######.......\n"
    ".......######........................######.......\n"
    "........####..........................####........\n"
    ".........##............................##.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // y
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........##............................##.........\n"
    "........####..........................####........\n"
    ".......######........................######.......\n"
    ".......######.......................#######.......\n"
    "........######......................######........\n"
    ".........######....................######.........\n"
    ".........######...................#######.........\n"
    "..........######..................######..........\n"
    "...........######................######...........\n"
    "...........######...............#######...........\n"
    "............######.............#######............\n"
    ".............######............######.............\n"
    ".............######...........######..............\n"
    "..............######.........#######..............\n"
    "..............#######.......#######...............\n"
    "...............######.......######................\n"
    "................######.....######.................\n"
    "................#######...#######.................\n"
    ".................######...######..................\n"
    "..................######.######...................\n"
    "..................#############...................\n"
    "...................###########....................\n"
    "....................#########.....................\n"
    "....................########......................\n"
    ".....................#######......................\n"
    ".....................#######......................\n"
    "....................#######.......................\n"
    "...................########.......................\n"
    "..................#######.........................\n"
    "..................######..........................\n"
    ".................######...........................\n"
    "................#######...........................\n"
    "...............#######............................\n"
    "...............######.............................\n"
    "..............######..............................\n"
    ".............#######..............................\n"
    ".............######...............................\n"
    ".............#####................................\n"
    ".............#####................................\n"
    "...............#..................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
    // z
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    ".........################################.........\n"
    "........##################################........\n"
    ".......####################################.......\n"
    ".......####################################.......\n"
    "........##################################........\n"
    ".........################################.........\n"
    ".................................#######..........\n"
    ".................................######...........\n"
    "................................#######...........\n"
    "...............................#######............\n"
    "..............................#######.............\n"
    ".............................#######..............\n"
    "............................#######...............\n"
    "...........................#######................\n"
    "..........................#######.................\n"
    "..........................######..................\n"
    ".........................#######..................\n"
    "........................#######...................\n"
    ".......................#######....................\n"
    "......................#######.....................\n"
    ".....................#######......................\n"
    "....................#######.......................\n"
    "...................#######........................\n"
    "..................#######.........................\n"
    "..................######..........................\n"
    ".................#######..........................\n"
    "................#######...........................\n"
    "...............#######............................\n"
    "..............#######.............................\n"
    ".............#######..............................\n"
    "............#######...............................\n"
    "...........#######................................\n"
    "...........######.................................\n"
    "..........#######.................................\n"
    ".........################################.........\n"
    "........##################################........\n"
    ".......####################################.......\n"
    ".......####################################.......\n"
    "........##################################........\n"
    ".........################################.........\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................\n"
    "..................................................",
};

}  // namespace

const BinaryImage& reference_glyph(Letter letter) {
  static const auto glyphs = [] {
    std::vector<BinaryImage> out;
    out.reserve(kLetterCount);
    for (auto text : kTemplates) out.push_back(parse_glyph_text(text));
    return out;
  }();
  return glyphs[letter.index()];
}

}  // namespace glyphnet
