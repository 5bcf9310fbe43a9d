"""
Documents produits par les commandes et l'API.

Chaque fonction renvoie un dictionnaire sérialisable en JSON ; les rendus
table, csv et xlsx sont dans exports.py.
"""
import logging

from hecke.algebre import alpha_U
from hecke.pentes import audit_slopes, solve_profile
from intertwine.zeta import m_tau_expansion, zeta_support_verdict
from parabolic.paraboliques import format_subset
from parabolic.poids import pure_parabolic_dim
from refine.classification import gamma, optimal_parabolic, stratify
from refine.switching import to_B_spin

logger = logging.getLogger(__name__)


def document_classification(n, bound=None, workers=None):
    strates = stratify(n, bound=bound, workers=workers)
    lignes = [
        {
            'parabolique': p.label,
            'x_p': sorted(p.xp),
            'dim': pure_parabolic_dim(p),
            'effectif': len(membres),
            'raffinements': [str(r) for r in membres],
        }
        for p, membres in strates.items()
    ]
    return {
        'n': n,
        'strates': lignes,
        'total': sum(ligne['effectif'] for ligne in lignes),
        'b_spin': lignes[0]['effectif'],
    }


def document_info(r):
    profil = optimal_parabolic(r)
    taus, cible = to_B_spin(r)
    alphas = {k: alpha_U(r, k) for k in range(1, 2 * r.n + 1)}
    return {
        'sigma': str(r),
        'n': r.n,
        'spin_set': sorted(profil.spin_set),
        'gamma': list(gamma(r).values),
        'optimal': profil.optimal.label,
        'x_p': format_subset(profil.spin_set),
        'dim': profil.dimension,
        'alpha_U': {str(k): alphas[k].to_json() for k in alphas},
        'alpha_U_display': {str(k): alphas[k].format() for k in alphas},
        'b_spin_target': str(cible),
        'tau': [list(t) for t in taus],
    }


def document_pentes(r, lam, p, donnees, resoudre=False, joint=()):
    lignes = audit_slopes(r, lam, donnees, p)
    violations = [ligne.index for ligne in lignes if not ligne.ok]
    document = {
        'sigma': str(r),
        'poids': list(lam.coeffs),
        'parabolique': p.label,
        'lignes': [
            {'indice': ligne.index, 'borne': ligne.bound, 'pente': str(ligne.slope), 'respectee': ligne.ok}
            for ligne in lignes
        ],
        'non_critique': not violations,
        'violations': violations,
    }
    if resoudre:
        if not isinstance(donnees, dict):
            logger.info("Résolution ignorée : un profil a été fourni directement")
        else:
            document['resolution'] = solve_profile(donnees, lam, r.sigma, joint=joint).to_json()
    return document


def document_zeta(p, beta):
    verdict = zeta_support_verdict(p, beta)
    document = verdict.to_json()
    document.update({'parabolique': p.label, 'beta': beta})
    return document


def document_mtau(n, p):
    developpement = m_tau_expansion(n, p)
    return {
        'n': n,
        'parabolique': p.label,
        'chaine': [n + a for a in developpement.chain.letters],
        'coefficients': {
            f"[{classe.rep.format()}]'": c.format()
            for classe, c in sorted(developpement.coefficients.items())
        },
        'coefficient_principal': developpement.leading.format(),
        'facteurs_c_s': len(developpement.c_s_factors),
        'exposant_p_principal': developpement.leading_p_exponent,
        'echelle_f_w': developpement.fw_scale_exponent,
    }
