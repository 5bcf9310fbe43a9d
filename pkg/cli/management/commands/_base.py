"""Options et rendu communs aux commandes de raffinements."""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.exports import rendu_json


class CommandeRaffinement(BaseCommand):
    formats = ('table', 'json')

    def add_arguments(self, parser):
        parser.add_argument(
            '--format',
            choices=self.formats,
            help="Format de sortie (défaut : settings.DEFAULT_OUTPUT_FORMAT)"
        )

    def format_sortie(self, options):
        choix = options.get('format') or settings.DEFAULT_OUTPUT_FORMAT
        if choix not in self.formats:
            raise CommandError(f"Format {choix!r} non disponible pour cette commande")
        return choix

    def ecrire(self, document, options, table):
        if self.format_sortie(options) == 'json':
            self.stdout.write(rendu_json(document))
        else:
            self.stdout.write(table(document))
