/* Evolves a symmetric start on 17 sites and prints P(x), then the mixing time. */
#include <stdio.h>
#include "qlga.h"

int main(void) {
    QlgaState *st = NULL;
    if (qlga_state_new(17, QLGA_INIT_KIND_SYMMETRIC, 0, 1, 2.0, 0.0, &st) != QLGA_STATUS_OK) {
        fprintf(stderr, "%s\n", qlga_last_error_message());
        return 1;
    }
    qlga_state_evolve(st, 0.7853981633974483, 8);

    double p[17];
    qlga_state_position_distribution(st, p, 17);
    double total = 0.0;
    for (int x = 0; x < 17; x++) total += p[x];
    printf("sum=%.12f\n", total);

    uint64_t t_mix = 0;
    QlgaState *fresh = NULL;
    qlga_state_new(17, QLGA_INIT_KIND_SYMMETRIC, 0, 1, 2.0, 0.0, &fresh);
    qlga_quantum_mixing_time(fresh, 0.7853981633974483, 0.05, 10000, &t_mix);
    printf("t_mix=%llu\n", (unsigned long long)t_mix);

    if (qlga_state_sites(NULL, NULL) != QLGA_STATUS_NULL_POINTER) return 2;
    printf("error=%s\n", qlga_last_error_message());

    qlga_state_free(fresh);
    qlga_state_free(st);
    return 0;
}
