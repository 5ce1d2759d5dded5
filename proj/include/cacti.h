/* C API of the cacti library: exact counting of cacti and constellations,
 * gluing-space volumes, and the circle matrix-model generating functions.
 *
 * All results are JSON strings allocated by the library; release them with
 * cacti_free_string. Return codes: 0 success, 1 mathematical disagreement
 * (a closed form and its oracle differ), 2 invalid input. On nonzero returns
 * cacti_last_error() describes the problem (thread-local).
 */
#ifndef CACTI_H
#define CACTI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cacti_options cacti_options;

cacti_options* cacti_options_new(void);
void cacti_options_free(cacti_options* opts);

/* Known keys: threads, budget, genus, faces, max_degree (integers);
 * variant = printed|corrected; symbolic = 0|1; with_n = 0|1.
 * Returns 0, or 2 for an unknown key or a bad value. */
int cacti_options_set(cacti_options* opts, const char* key, const char* value);

/* Counts weighted cacti with the passport ("p,p;q" grammar). The result
 * {"formula":...,"oracle":...,"agree":...} compares the closed form (chosen
 * variant) with the factorization oracle. */
int cacti_count_cacti(const cacti_options* opts, const char* passport, char** result_json);

/* Weighted constellation count for the passport at the configured genus and
 * faces; oracle only: {"oracle":"num/den"}. */
int cacti_count_constellations(const cacti_options* opts, const char* passport,
                               char** result_json);

/* (1,n)-constellation count for comma-separated polygon sizes; compares the
 * closed form with the factorization oracle. */
int cacti_count_one_n(const cacti_options* opts, const char* sizes, char** result_json);

/* Volume of the gluing space for circles "color:len[,len...];..." at the
 * configured genus and faces. Symbolic lengths give a polynomial; an
 * all-numeric spec gives a rational. Genus 0 / one face also reports the
 * closed form and an agreement flag. */
int cacti_volume(const cacti_options* opts, const char* circles, char** result_json);

/* Series of the generating function f up to max_degree (polynomial JSON);
 * with_n = 1 produces the N-graded series F instead. */
int cacti_expand_f(const cacti_options* opts, const char* circles, char** result_json);

/* Runs a verification suite (thm1polyg, thm2polyg, thm3polyg, thm1circ,
 * thm2circ, asymptotic, matrixmodel, all) and returns its JSON report.
 * Returns 1 when any check fails. */
int cacti_verify(const cacti_options* opts, const char* suite, char** report_json);

void cacti_free_string(char* s);

/* Message for the last failing call on this thread; empty if none. */
const char* cacti_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* CACTI_H */
