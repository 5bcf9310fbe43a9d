"""
Rendus des documents : table texte, JSON, CSV et classeur xlsx.
"""
import csv
import io
import json
import logging
from pathlib import Path

import xlsxwriter
from django.conf import settings

from parabolic.paraboliques import format_subset

logger = logging.getLogger(__name__)

CSV_SCHEMA_VERSION = 1
CSV_COLUMNS = ['sigma', 'spin_set', 'optimal', 'x_p', 'dim']

EN_TETES_CLASSIFICATION = ('parabolique', 'X_P', 'dim', 'effectif', 'raffinements')


def rendu_json(document):
    return json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True)


def _ligne_classification(label, xp, dim, effectif, membres):
    return f"{label:<11} | {xp:<9} | {dim:<3} | {effectif:<8} | {membres}".rstrip()


def table_classification(document):
    n = document['n']
    lignes = [
        f"Stratification spin des p-raffinements de GL({2 * n}) (n={n})",
        _ligne_classification(*EN_TETES_CLASSIFICATION),
    ]
    for strate in document['strates']:
        lignes.append(_ligne_classification(
            strate['parabolique'],
            format_subset(strate['x_p']),
            str(strate['dim']),
            str(strate['effectif']),
            ' '.join(strate['raffinements']),
        ))
    lignes.append(
        f"Total : {document['total']} raffinements, {len(document['strates'])} paraboliques spin, "
        f"{document['b_spin']} B-spin"
    )
    return '\n'.join(lignes)


def _lignes_csv(document):
    for strate in document['strates']:
        xp = format_subset(strate['x_p'])
        for sigma in strate['raffinements']:
            yield [sigma, xp, strate['parabolique'], xp, strate['dim']]


def csv_classification(document):
    tampon = io.StringIO()
    writer = csv.writer(tampon, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    writer.writerows(_lignes_csv(document))
    return tampon.getvalue()


def chemin_export(nom, output=None):
    """Chemin demandé, sinon settings.EXPORT_DIR / nom."""
    if output:
        chemin = Path(output)
    else:
        chemin = Path(settings.EXPORT_DIR) / nom
    chemin.parent.mkdir(parents=True, exist_ok=True)
    return chemin


def export_to_excel(document, chemin):
    """Classeur xlsx : une feuille par strate et une feuille de résumé."""
    workbook = xlsxwriter.Workbook(str(chemin))

    # Formats
    header_format = workbook.add_format({
        'bold': True,
        'text_wrap': True,
        'valign': 'top',
        'fg_color': '#D7E4BC',
        'border': 1
    })

    resume = workbook.add_worksheet('Résumé')
    for col, header in enumerate(EN_TETES_CLASSIFICATION[:-1]):
        resume.write(0, col, header, header_format)
    for row, strate in enumerate(document['strates'], 1):
        resume.write(row, 0, strate['parabolique'])
        resume.write(row, 1, format_subset(strate['x_p']))
        resume.write(row, 2, strate['dim'])
        resume.write(row, 3, strate['effectif'])
    resume.set_column(0, 3, 15)

    for strate in document['strates']:
        # les virgules sont admises dans un nom de feuille
        worksheet = workbook.add_worksheet(f"P={strate['parabolique']}")
        for col, header in enumerate(CSV_COLUMNS):
            worksheet.write(0, col, header, header_format)
        xp = format_subset(strate['x_p'])
        for row, sigma in enumerate(strate['raffinements'], 1):
            worksheet.write(row, 0, sigma)
            worksheet.write(row, 1, xp)
            worksheet.write(row, 2, strate['parabolique'])
            worksheet.write(row, 3, xp)
            worksheet.write(row, 4, strate['dim'])
        largeur = max([len(sigma) for sigma in strate['raffinements']] + [12])
        worksheet.set_column(0, len(CSV_COLUMNS) - 1, largeur + 2)

    workbook.close()
    logger.info("Export xlsx écrit dans %s", chemin)
    return chemin


def table_info(document):
    lignes = [
        f"Raffinement {document['sigma']} (n={document['n']})",
        f"  ensemble spin : {format_subset(document['spin_set'])}",
        f"  gamma : {' '.join(str(g) for g in document['gamma'])}",
        f"  parabolique optimal : {document['optimal']} (dimension {document['dim']})",
    ]
    for k, monome in document['alpha_U_display'].items():
        lignes.append(f"  alpha(U_p,{k}) = {monome}")
    taus = ' '.join(f"({i},{j})" for i, j in document['tau']) or '-'
    lignes.append(f"  bascule vers B-spin : {document['b_spin_target']} par tau = {taus}")
    return '\n'.join(lignes)


def table_pentes(document):
    poids = ','.join(str(c) for c in document['poids'])
    lignes = [
        f"Audit des pentes de {document['sigma']} pour lambda = ({poids}), parabolique {document['parabolique']}",
        f"{'indice':<6} | {'borne':<6} | {'pente':<8} | verdict",
    ]
    for ligne in document['lignes']:
        verdict = 'ok' if ligne['respectee'] else 'critique'
        lignes.append(f"{ligne['indice']:<6} | {ligne['borne']:<6} | {ligne['pente']:<8} | {verdict}")
    if document['non_critique']:
        lignes.append("Verdict : pente non critique")
    else:
        indices = ', '.join(str(i) for i in document['violations'])
        lignes.append(f"Verdict : pente critique (indice {indices})")
    resolution = document.get('resolution')
    if resolution is not None:
        if resolution['verdict'] == 'coherent':
            t = ', '.join(resolution['profil']['t'])
            lignes.append(f"Profil compatible : t = ({t}), v_p(eta) = {resolution['profil']['eta_val']}")
            if resolution['parametres_libres']:
                lignes.append(f"  paramètres libres (fixés à 0) : {', '.join(resolution['parametres_libres'])}")
        else:
            lignes.append(f"Système incohérent, première équation violée : {resolution['premiere_violation']}")
            for equation, coefficient in sorted(resolution['combinaison'].items()):
                lignes.append(f"  {coefficient} x [{equation}]")
            lignes.append(f"  résidu : {resolution['residu']}")
    return '\n'.join(lignes)


def table_zeta(document):
    n = len(document['exposants'])
    lignes = [f"Parabolique {document['parabolique']} (beta = {document['beta']})", "nu_beta(t_P^beta) :"]
    for i, e in enumerate(document['exposants'], start=1):
        ligne = ['0'] * n
        ligne[n - i] = f"p^{e}"
        lignes.append('  ' + ' '.join(f"{x:<5}" for x in ligne).rstrip())
    oui_non = lambda b: 'oui' if b else 'non'  # noqa: E731
    lignes.extend([
        f"entier : {oui_non(document['entier'])}",
        f"nombre de blocs : {document['parite_blocs']}",
        f"contenu dans (n,n) : {oui_non(document['contenu_dans_Q'])}",
        "Verdict : annulation forcée" if document['annulation_forcee'] else "Verdict : support possible",
    ])
    return '\n'.join(lignes)


def table_mtau(document, echelle=False):
    chaine = ' '.join(f"s_{a}" for a in document['chaine']) or '-'
    lignes = [
        f"M_tau pour n={document['n']}, parabolique {document['parabolique']}",
        f"Chaîne : {chaine}",
        f"{'classe':<10} | coefficient",
    ]
    for classe, coefficient in document['coefficients'].items():
        lignes.append(f"{classe:<10} | {coefficient}")
    lignes.append(f"Coefficient de [1]' avant normalisation : {document['coefficient_principal']}")
    if echelle:
        lignes.append(f"Normalisation f_w(w) = p^{document['echelle_f_w']}")
    return '\n'.join(lignes)
