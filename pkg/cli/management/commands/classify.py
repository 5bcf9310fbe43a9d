import logging

from cli.exports import chemin_export, csv_classification, export_to_excel, table_classification
from cli.options import exiger
from cli.rapports import document_classification
from core.decorators import commande_raffinement
from ._base import CommandeRaffinement

logger = logging.getLogger(__name__)


class Command(CommandeRaffinement):
    help = 'Stratifie les p-raffinements de GL(2n) par parabolique spin optimal'
    formats = ('table', 'json', 'csv', 'xlsx')

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, help='Rang n (GL(2n))')
        parser.add_argument(
            '--bound',
            type=int,
            help="Plus grand n énumérable (défaut : settings.ENUMERATION_BOUND)"
        )
        parser.add_argument('--workers', type=int, help="Nombre de fils pour l'énumération")
        parser.add_argument('--output', type=str, help='Fichier de sortie pour csv et xlsx')

    @commande_raffinement
    def handle(self, *args, **options):
        n = exiger(options.get('n'), '--n')
        document = document_classification(n, bound=options.get('bound'), workers=options.get('workers'))
        format_sortie = self.format_sortie(options)

        if format_sortie == 'xlsx':
            chemin = export_to_excel(document, chemin_export(f"stratification_n{n}.xlsx", options.get('output')))
            self.stdout.write(self.style.SUCCESS(f"Export écrit : {chemin}"))
        elif format_sortie == 'csv':
            contenu = csv_classification(document)
            if options.get('output'):
                chemin = chemin_export(None, options['output'])
                chemin.write_text(contenu, encoding='utf-8')
                self.stdout.write(self.style.SUCCESS(f"Export écrit : {chemin}"))
            else:
                self.stdout.write(contenu, ending='')
        else:
            self.ecrire(document, options, table_classification)
        logger.debug("classify n=%s terminé (%s)", n, format_sortie)
