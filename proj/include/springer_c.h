#ifndef SPRINGER_C_H
#define SPRINGER_C_H

/* C interface to the graded Springer correspondence engine for dihedral
   groups D_n, n odd. Every call returns an spr_status; on failure
   spr_last_error() describes the problem for the calling thread.
   Strings returned through char** are owned by the caller and released
   with spr_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spr_status {
  SPR_OK = 0,
  SPR_E_INVALID = 1,     /* bad argument or unparsable label/preorder */
  SPR_E_TRUNCATION = 2,  /* truncation window too small for the request */
  SPR_E_NO_CLOSED = 3,   /* no closed form is known for the module */
  SPR_E_RANGE = 4,       /* request exceeds a supported size */
  SPR_E_INTERNAL = 5
} spr_status;

typedef struct spr_engine spr_engine;
typedef struct spr_report spr_report;

const char* spr_version(void);
const char* spr_last_error(void);
void spr_string_free(char* s);

/* trunc <= 0 selects the default window 3n+6. cache_dir may be NULL. */
spr_status spr_engine_new(int n, int trunc, const char* cache_dir, spr_engine** out);
void spr_engine_free(spr_engine* e);
spr_status spr_engine_info(const spr_engine* e, int* n, int* trunc);

/* Scan every preorder on Irr(D_n). properties != 0 also runs the
   reciprocity and property checks on passing families. */
spr_status spr_classify(spr_engine* e, int jobs, int properties, spr_report** out);
void spr_report_free(spr_report* r);
spr_status spr_report_summary(const spr_report* r, long* scanned, long* passed, long* expected, long* inconclusive,
                              int* match);
spr_status spr_report_json(const spr_report* r, char** out);
spr_status spr_report_table(const spr_report* r, char** out);

/* Graded character of a module, as JSON. Module specs:
     P:<label>          projective cover, e.g. P:triv or P_triv
     L:<label>          simple module
     F:<label>:<D>      trace quotient, D a comma list, e.g. F:chi1:sgn,chi2
     J:<label>          F:<label>:<label>,sgn
   Labels are triv, sgn, chi1 .. chiC. */
spr_status spr_gch(spr_engine* e, const char* module, char** out_json);

/* Characters of the candidate family K, Kt of a preorder given as
   "a<=b;c<=d" (relations only, closure taken). */
spr_status spr_family(spr_engine* e, const char* preorder, char** out_json);

/* Ext groups as JSON. target "L:<label>" gives Ext(M, L_mu) keyed by
   generator degree; any other spec gives Ext(M, N^*) keyed by Hom degree. */
spr_status spr_ext(spr_engine* e, const char* from, const char* to, char** out_json);

/* Omega_{lambda,mu} as rational functions and expanded to degree trunc. */
spr_status spr_omega(int n, int trunc, char** out_json);

/* Acceptance battery for the given n values; only_mask bit k selects
   criterion k (0 runs all). *all_ok is set to 1 when every criterion passes. */
spr_status spr_verify(const int* ns, int count, int jobs, const char* cache_dir, unsigned only_mask, char** out_json,
                      int* all_ok);

#ifdef __cplusplus
}
#endif

#endif
